#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "ixdelay/analytic.hpp"
#include "ixdelay/ensemble.hpp"
#include "ixdelay/histogram.hpp"
#include "ixdelay/steady_state.hpp"
#include "ixdelay/step_map.hpp"
#include "ixdelay/validation.hpp"
#include "reference_curves.hpp"

using namespace ixdelay;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kOracleTol = 1e-9;
constexpr double kOracleSeconds = 30.0;
constexpr double kTableTol = 1e-5;
constexpr double kEdsProbabilityTol = 0.02;
constexpr double kKolmogorovTol = 0.02;
constexpr double kEdsMeanTol = 0.02;
constexpr double kErgodicTol = 0.02;
constexpr double kLowFlowRelTol = 0.05;
constexpr double kConvergenceL1 = 0.05;
constexpr std::size_t kConvergenceIteration = 8;
constexpr std::size_t kPartitionSamples = 1000000;
constexpr double kPropagateSeconds = 1.0;
constexpr double kIdentityTol = 1e-8;

constexpr std::size_t kParticles = 10000;
constexpr std::uint64_t kSeed = 1;

const Intersection kTwoLane = two_lane_intersection(0.1, 0.5, 2.0, 1.0);

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-14);
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double cdf_or_one(const SteadyStateSolution& s, double t) { return t >= s.delta_d ? 1.0 : delay_cdf(s, t); }

Verdict oracle_equivalence() {
  Verdict v;
  const auto start = Clock::now();
  std::size_t cells = 0, bad = 0;
  std::uint64_t fallbacks = 0;
  for (double lambda : {0.2, 0.6, 1.2}) {
    for (double dd : {1.0, 2.0, 4.0}) {
      for (double ds : {0.0, 1.0}) {
        for (Policy p : {Policy::fifo, Policy::fo}) {
          const Intersection spec = two_lane_intersection(lambda / 2, lambda / 2, dd, ds);
          const ValidationReport r = compare_mapping_vs_oracle(spec, p, {200, 100, kSeed, kOracleTol});
          ++cells;
          fallbacks += r.fallback_count;
          const double worst = r.comparisons.front().value_a;
          if (!(worst < kOracleTol)) {
            ++bad;
            v.fail(fmt("%s lambda=%g dd=%g ds=%g max discrepancy %.3g", std::string(to_string(p)).c_str(), lambda,
                       dd, ds, worst));
          }
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kOracleSeconds) v.fail(fmt("runtime %.1f s", elapsed));
  v.note(fmt("%zu/%zu cells agree, %llu FO replay steps, %.2f s", cells - bad, cells,
             static_cast<unsigned long long>(fallbacks), elapsed));
  return v;
}

Verdict point_masses() {
  Verdict v;
  for (int load = 1; load <= 5; ++load) {
    const auto s = solve_steady_state(1.0, load);
    const double zero = 2 * s.mass_at_zero, full = 2 * s.mass_at_delta_d;
    const double want_zero = reference::kProbabilityZero[10 * load].y;
    const double want_full = reference::kProbabilityDeltaD[10 * load].y;
    if (std::abs(zero - want_zero) > kTableTol) v.fail(fmt("analytic zero mass at %d: %.7f vs %.7f", load, zero, want_zero));
    if (std::abs(full - want_full) > kTableTol) v.fail(fmt("analytic dd mass at %d: %.7f vs %.7f", load, full, want_full));

    EdsCheckOptions opt;
    opt.particles = kParticles;
    opt.seed = kSeed;
    opt.probability_tolerance = kEdsProbabilityTol;
    const ValidationReport r = compare_eds_vs_analytic(1.0, load, opt);
    if (r.flagged) {
      v.fail(fmt("EDS at %d did not converge", load));
      continue;
    }
    const auto& pz = r.comparisons[0];
    const auto& pd = r.comparisons[1];
    if (!pz.pass) v.fail(fmt("EDS zero mass at %d: %.4f vs %.4f", load, pz.value_a, pz.value_b));
    if (!pd.pass) v.fail(fmt("EDS dd mass at %d: %.4f vs %.4f", load, pd.value_a, pd.value_b));
    v.note(fmt("load %d EDS %.4f/%.4f analytic %.4f/%.4f", load, pz.value_a, pd.value_a, zero, full));
  }
  return v;
}

Verdict delay_cdf_check() {
  Verdict v;
  const std::vector<std::pair<double, const std::vector<reference::CurvePoint>*>> curves{
      {1.0, &reference::kCdfDeltaD1}, {2.0, &reference::kCdfDeltaD2},
      {3.0, &reference::kCdfDeltaD3}, {4.0, &reference::kCdfDeltaD4}};
  std::size_t points = 0;
  for (const auto& [dd, curve] : curves) {
    const auto s = solve_steady_state(1.0, dd);
    for (const auto& p : *curve) {
      ++points;
      const double got = cdf_or_one(s, p.x);
      if (std::abs(got - p.y) > kTableTol) v.fail(fmt("dd=%g t=%g: %.7f vs %.7f", dd, p.x, got, p.y));
    }
  }
  EdsCheckOptions opt;
  opt.particles = kParticles;
  opt.seed = kSeed;
  opt.kolmogorov_tolerance = kKolmogorovTol;
  const ValidationReport r = compare_eds_vs_analytic(1.0, 4.0, opt);
  if (r.flagged) {
    v.fail("EDS at lambda=1, dd=4 did not converge");
  } else {
    const auto& ks = r.comparisons[2];
    if (!ks.pass) v.fail(fmt("Kolmogorov distance %.4f", ks.value_a));
    v.note(fmt("%zu table points, Kolmogorov distance %.4f", points, ks.value_a));
  }
  return v;
}

Verdict expected_delay_check() {
  Verdict v;
  constexpr double dd = 1.5;
  for (const auto& p : reference::kExpectedDelay) {
    if (p.x == 0.0) continue;
    const double got = expected_delay(p.x, dd);
    if (std::abs(got - p.y) > kTableTol) v.fail(fmt("E(d) at lambda=%g: %.7f vs %.7f", p.x, got, p.y));
  }
  std::string eds_line = "EDS", ergodic_line = "ergodic";
  for (const auto& p : reference::kEdsExpectedDelay) {
    const Intersection spec = two_lane_intersection(p.x / 2, p.x / 2, dd, 0.0);
    SteadyStateOptions opt;
    opt.particles = kParticles;
    opt.seed = kSeed;
    opt.tol = 0.1;
    opt.max_iterations = 300;
    SteadyStateRun run = run_to_steady_state(spec, Policy::fo, opt);
    if (!run.converged) {
      v.fail(fmt("EDS at lambda=%g did not converge", p.x));
      continue;
    }
    const double eds = mean_delay(sample_steady_state(run.ensemble, 10), kParticles).mean;
    if (std::abs(eds - p.y) > kEdsMeanTol) v.fail(fmt("EDS mean at lambda=%g: %.4f vs %.4f", p.x, eds, p.y));
    eds_line += fmt(" %.3f", eds);

    const double analytic = expected_delay(p.x, dd);
    const ErgodicEstimate erg = ergodic_mean_delay(spec, Policy::fo, 400000, kSeed);
    if (std::abs(erg.mean - analytic) > kErgodicTol) {
      v.fail(fmt("ergodic mean at lambda=%g: %.4f vs %.4f", p.x, erg.mean, analytic));
    }
    ergodic_line += fmt(" %.3f", erg.mean);
  }
  v.note(eds_line);
  v.note(ergodic_line);
  return v;
}

Verdict low_flow() {
  Verdict v;
  double worst = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double load = 0.2 * i / 20.0;
    for (double dd : {0.5, 1.5}) {
      const double lambda = load / dd;
      const double e = expected_delay(lambda, dd);
      const double rel = std::abs(low_flow_approx(lambda, dd) - e) / e;
      worst = std::max(worst, rel);
      if (!(rel < kLowFlowRelTol)) v.fail(fmt("load %g: relative error %.4f", load, rel));
    }
  }
  v.note(fmt("worst relative error %.4f", worst));
  return v;
}

Verdict convergence() {
  Verdict v;
  for (Policy p : {Policy::fifo, Policy::fo}) {
    ParticleEnsemble e = init_ensemble(kParticles, kTwoLane, p, kSeed);
    Histogram previous = histogram(e, 0.1);
    std::string trace;
    bool reached = false;
    while (e.iteration() < kConvergenceIteration) {
      propagate(e, 1);
      Histogram next = histogram(e, 0.1);
      const double l1 = l1_distance(previous, next);
      trace += fmt(" %.3f", l1);
      reached = reached || l1 < kConvergenceL1;
      previous = std::move(next);
    }
    if (!reached) v.fail(fmt("%s L1 never below %.2f by iteration %zu:%s", std::string(to_string(p)).c_str(),
                             kConvergenceL1, kConvergenceIteration, trace.c_str()));
    else v.note(fmt("%s L1:%s", std::string(to_string(p)).c_str(), trace.c_str()));
  }
  const Intersection super = two_lane_intersection(2.0, 2.0, 2.0, 1.0);
  for (Policy p : {Policy::fifo, Policy::fo}) {
    SteadyStateOptions opt;
    opt.particles = kParticles;
    opt.seed = kSeed;
    opt.tol = kConvergenceL1;
    opt.max_iterations = 200;
    const SteadyStateRun run = run_to_steady_state(super, p, opt);
    if (run.converged || !run.diverging) {
      v.fail(fmt("supercritical %s not flagged", std::string(to_string(p)).c_str()));
    } else {
      v.note(fmt("supercritical %s flagged, mean max delay %.1f at iteration %zu", std::string(to_string(p)).c_str(),
                 run.log.back().mean_max_delay, run.iterations_used));
    }
  }
  return v;
}

Verdict policy_ordering() {
  Verdict v;
  const PolicyComparison r = run_policy_comparison(kTwoLane, kParticles, kConvergenceIteration, kSeed);
  if (!(r.fo_mean_total < r.fifo_mean_total)) {
    v.fail(fmt("FO %.4f not below FIFO %.4f", r.fo_mean_total, r.fifo_mean_total));
  }
  v.note(fmt("mean T1+T2 FO %.4f FIFO %.4f; mean event delay FO %.4f FIFO %.4f", r.fo_mean_total, r.fifo_mean_total,
             r.fo_mean_event_delay, r.fifo_mean_event_delay));
  return v;
}

Verdict partition() {
  Verdict v;
  const Lane lane1 = Lane::from_number(1);
  for (const Intersection& spec : {kTwoLane, two_lane_intersection(0.3, 0.3, 2.0, 0.0)}) {
    const double dd = spec.delta_d(), ds = spec.delta_s();
    for (Policy p : {Policy::fifo, Policy::fo}) {
      RandomStream rng(kSeed);
      std::size_t bad = 0, uncovered = 0;
      for (std::size_t i = 0; i < kPartitionSamples; ++i) {
        // uniform over the reachable set: newest lane a ≥ 0, other in [−Δd, a − Δd]
        const double a = (3 * (dd + ds) + 1) * rng.open_uniform();
        const double b = -dd + a * rng.open_uniform();
        const DelayVector T = rng.open_uniform() < 0.5 ? DelayVector{a, b} : DelayVector{b, a};
        const double x = 2 * (dd + ds + 1) * rng.open_uniform();
        const auto rows = matching_regions(T, x, lane1, spec, p);
        if (rows.size() == 1) continue;
        if (rows.empty() && p == Policy::fo && classify_region(T, x, lane1, spec, p).uncovered()) {
          ++uncovered;
          continue;
        }
        ++bad;
      }
      const char* name = p == Policy::fifo ? "fifo" : "fo";
      if (bad > 0) v.fail(fmt("%s ds=%g: %zu samples not in exactly one row", name, ds, bad));
      v.note(fmt("%s ds=%g: %zu uncovered (replay)", name, ds, uncovered));
    }
  }
  return v;
}

Verdict performance() {
  Verdict v;
  for (Policy p : {Policy::fifo, Policy::fo}) {
    ParticleEnsemble e = init_ensemble(kParticles, kTwoLane, p, kSeed);
    const auto start = Clock::now();
    propagate(e, 100, {1, nullptr});
    const double elapsed = seconds_since(start);
    if (!(elapsed < kPropagateSeconds)) v.fail(fmt("%s %.3f s", std::string(to_string(p)).c_str(), elapsed));
    v.note(fmt("%s %.3f s", std::string(to_string(p)).c_str(), elapsed));
  }
  return v;
}

Verdict identities() {
  Verdict v;
  double worst[4] = {0, 0, 0, 0};
  for (double lambda : {0.05, 0.1, 0.3, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
    for (double dd : {0.1, 0.5, 1.0, 2.0, 4.0}) {
      const auto s = solve_steady_state(lambda, dd);
      const double smooth = integrate([&](double t) { return s.finite_density(t); }, 0.0, dd);
      const double errs[4] = {
          std::abs(2 * (s.mass_at_zero + s.mass_at_delta_d + smooth) - 1.0),
          std::abs(delay_cdf(s, 0.0) - 2 * s.mass_at_zero),
          std::abs(delay_cdf(s, dd) - 1.0),
          std::abs(dd - integrate([&](double t) { return delay_cdf(s, t); }, 0.0, dd) - expected_delay(lambda, dd)),
      };
      for (int k = 0; k < 4; ++k) worst[k] = std::max(worst[k], errs[k]);
    }
  }
  const char* names[4] = {"normalization", "P_d(0)", "P_d(dd)", "mean"};
  for (int k = 0; k < 4; ++k) {
    if (!(worst[k] < kIdentityTol)) v.fail(fmt("%s off by %.3g", names[k], worst[k]));
    v.note(fmt("%s %.2g", names[k], worst[k]));
  }
  return v;
}

struct Criterion {
  const char* title;
  Verdict (*run)();
};

const Criterion kCriteria[] = {
    {"closed-form maps reproduce the micro-policy oracle", oracle_equivalence},
    {"steady-state point masses (analytic and ensemble)", point_masses},
    {"steady-state delay CDF (analytic and ensemble)", delay_cdf_check},
    {"expected delay (analytic, ensemble sweep, single trajectory)", expected_delay_check},
    {"low-flow approximation", low_flow},
    {"histogram convergence and supercritical detection", convergence},
    {"FO below FIFO with common random numbers", policy_ordering},
    {"region rows partition the reachable states", partition},
    {"ensemble propagation speed", performance},
    {"analytic identities", identities},
};

bool run_one(std::size_t n) {
  const Criterion& c = kCriteria[n - 1];
  const auto start = Clock::now();
  Verdict v;
  try {
    v = c.run();
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  std::printf("%s criterion %zu: %s (%.1f s) [%s]\n", v.pass ? "PASS" : "FAIL", n, c.title, seconds_since(start),
              v.detail.c_str());
  std::fflush(stdout);
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr std::size_t count = std::size(kCriteria);
  if (argc > 1) {
    const long n = std::strtol(argv[1], nullptr, 10);
    if (n < 1 || static_cast<std::size_t>(n) > count) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], count);
      return 2;
    }
    return run_one(static_cast<std::size_t>(n)) ? 0 : 1;
  }
  bool ok = true;
  for (std::size_t n = 1; n <= count; ++n) ok = run_one(n) && ok;
  return ok ? 0 : 1;
}
