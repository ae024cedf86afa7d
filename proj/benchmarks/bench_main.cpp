#include <benchmark/benchmark.h>

#include "ixdelay/analytic.hpp"
#include "ixdelay/ensemble.hpp"
#include "ixdelay/equilibrium.hpp"
#include "ixdelay/event_stream.hpp"
#include "ixdelay/histogram.hpp"

using namespace ixdelay;

namespace {

const Intersection kTwoLane = two_lane_intersection(0.1, 0.5, 2.0, 1.0);

void BM_Propagate(benchmark::State& state) {
  const Policy policy = state.range(0) == 0 ? Policy::fifo : Policy::fo;
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    ParticleEnsemble e = init_ensemble(10000, kTwoLane, policy, 1);
    propagate(e, 100, {threads, nullptr});
    benchmark::DoNotOptimize(e.data().data());
  }
  state.SetItemsProcessed(state.iterations() * 10000 * 100);
}
BENCHMARK(BM_Propagate)->ArgsProduct({{0, 1}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_Histogram(benchmark::State& state) {
  ParticleEnsemble e = init_ensemble(10000, kTwoLane, Policy::fo, 1);
  propagate(e, 8);
  for (auto _ : state) benchmark::DoNotOptimize(histogram(e, 0.1).total_mass());
}
BENCHMARK(BM_Histogram)->Unit(benchmark::kMicrosecond);

void BM_Tracker(benchmark::State& state) {
  const Policy policy = state.range(0) == 0 ? Policy::fifo : Policy::fo;
  for (auto _ : state) {
    EquilibriumTracker tracker(kTwoLane, policy);
    RandomStream rng(3);
    double t = 0.0;
    tracker.push(t, sample_lane(rng, kTwoLane));
    for (int i = 0; i < 1000; ++i) {
      const ArrivalEvent ev = sample_event(rng, kTwoLane);
      t += ev.gap;
      benchmark::DoNotOptimize(tracker.push(t, ev.lane));
    }
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Tracker)->Arg(0)->Arg(1);

void BM_ExpectedDelay(benchmark::State& state) {
  double lambda = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_delay(lambda, 1.5));
    lambda = lambda > 4.0 ? 0.1 : lambda + 0.01;
  }
}
BENCHMARK(BM_ExpectedDelay);

void BM_DelayCdf(benchmark::State& state) {
  const auto s = solve_steady_state(1.0, 2.0);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(delay_cdf(s, t));
    t = t > 1.99 ? 0.0 : t + 0.001;
  }
}
BENCHMARK(BM_DelayCdf);

}  // namespace

BENCHMARK_MAIN();
