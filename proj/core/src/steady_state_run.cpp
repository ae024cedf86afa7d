#include "ixdelay/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ixdelay {
namespace {

IterationRecord record(const ParticleEnsemble& ensemble, double l1) {
  return {ensemble.iteration(), l1, mean_total_delay(ensemble), mean_max_delay(ensemble)};
}

MeanEstimate batch_means(const std::vector<double>& series, std::size_t batches) {
  MeanEstimate out;
  out.count = series.size();
  if (series.empty()) return out;
  out.mean = pairwise_sum(series) / static_cast<double>(series.size());
  batches = std::min(batches, series.size());
  if (batches < 2) return out;
  std::vector<double> means;
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t first = series.size() * b / batches;
    const std::size_t last = series.size() * (b + 1) / batches;
    const std::span<const double> chunk(series.data() + first, last - first);
    means.push_back(pairwise_sum(chunk) / static_cast<double>(chunk.size()));
  }
  double ss = 0.0;
  for (double m : means) ss += (m - out.mean) * (m - out.mean);
  const double var = ss / static_cast<double>(batches - 1);
  out.standard_error = std::sqrt(var / static_cast<double>(batches));
  return out;
}

}  // namespace

SteadyStateRun run_to_steady_state(const Intersection& spec, Policy policy, const SteadyStateOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (options.consecutive == 0) throw std::invalid_argument("consecutive must be at least 1");

  SteadyStateRun run{init_ensemble(options.particles, spec, policy, options.seed),
                     Histogram(spec.lane_count(), -spec.delta_d(), options.bin_width), 0, false, false, {}};
  run.last_histogram = histogram(run.ensemble, options.bin_width);
  run.log.push_back(record(run.ensemble, std::numeric_limits<double>::quiet_NaN()));

  const PropagateOptions step_options{options.threads, nullptr};
  std::size_t streak = 0;
  while (run.ensemble.iteration() < options.max_iterations) {
    propagate(run.ensemble, 1, step_options);
    Histogram next = histogram(run.ensemble, options.bin_width);
    const double l1 = l1_distance(run.last_histogram, next);
    run.last_histogram = std::move(next);
    run.log.push_back(record(run.ensemble, l1));

    if (std::isinf(options.tol)) {
      run.converged = true;
      break;
    }
    streak = l1 < options.tol ? streak + 1 : 0;
    if (streak >= options.consecutive) {
      run.converged = true;
      break;
    }
  }
  run.iterations_used = run.ensemble.iteration();

  const std::size_t window = options.divergence_window;
  if (!run.converged && window > 0 && run.log.size() > window) {
    const double now = run.log.back().mean_max_delay;
    const double then = run.log[run.log.size() - 1 - window].mean_max_delay;
    const bool stuck = std::all_of(run.log.end() - static_cast<std::ptrdiff_t>(window), run.log.end(),
                                   [&](const IterationRecord& r) { return !(r.l1 < options.tol); });
    run.diverging = stuck && now - then > spec.delta_d() + spec.delta_s();
  }
  return run;
}

std::vector<DelaySample> sample_steady_state(ParticleEnsemble& ensemble, std::size_t iterations,
                                             unsigned threads) {
  std::vector<DelaySample> samples;
  propagate(ensemble, iterations, {threads, &samples});
  return samples;
}

MeanEstimate mean_delay(const std::vector<DelaySample>& samples, std::size_t particles) {
  if (particles == 0) throw std::invalid_argument("particles must be positive");
  const std::size_t events = samples.size() / particles;
  std::vector<double> per_event(events);
  std::vector<double> row(particles);
  for (std::size_t e = 0; e < events; ++e) {
    for (std::size_t p = 0; p < particles; ++p) row[p] = samples[e * particles + p].delay;
    per_event[e] = pairwise_sum(row) / static_cast<double>(particles);
  }
  MeanEstimate est = batch_means(per_event, 20);
  est.count = samples.size();
  return est;
}

ErgodicEstimate ergodic_mean_delay(const Intersection& spec, Policy policy, std::size_t events,
                                   std::uint64_t seed) {
  if (events == 0) throw std::invalid_argument("events must be at least 1");
  ParticleEnsemble trajectory = init_ensemble(1, spec, policy, seed);
  std::vector<DelaySample> samples;
  propagate(trajectory, events, {1, &samples});

  ErgodicEstimate out;
  out.events = events;
  out.burn_in = std::min<std::size_t>(1000, events / 2);
  std::vector<double> kept;
  kept.reserve(events - out.burn_in);
  for (std::size_t e = out.burn_in; e < events; ++e) kept.push_back(samples[e].delay);
  const MeanEstimate est = batch_means(kept, 20);
  out.mean = est.mean;
  out.standard_error = est.standard_error;
  return out;
}

}  // namespace ixdelay
