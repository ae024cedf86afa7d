#include "ixdelay/validation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ixdelay/analytic.hpp"
#include "ixdelay/ensemble.hpp"
#include "ixdelay/equilibrium.hpp"
#include "ixdelay/event_stream.hpp"
#include "ixdelay/steady_state.hpp"
#include "ixdelay/step_map.hpp"

namespace ixdelay {
namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<std::pair<std::string, std::string>> describe(const Intersection& spec) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string rates;
  for (double r : spec.rates()) rates += (rates.empty() ? "" : ",") + fmt(r);
  out.emplace_back("lane_rates", rates);
  out.emplace_back("delta_d", fmt(spec.delta_d()));
  out.emplace_back("delta_s", fmt(spec.delta_s()));
  return out;
}

}  // namespace

std::string_view to_string(Relation relation) noexcept {
  switch (relation) {
    case Relation::within: return "within";
    case Relation::below: return "below";
    case Relation::at_most: return "at_most";
  }
  return "within";
}

Comparison compare(std::string metric, double a, double b, double tolerance, Relation relation) {
  bool pass = false;
  switch (relation) {
    case Relation::within: pass = std::abs(a - b) <= tolerance; break;
    case Relation::below: pass = a < b; break;
    case Relation::at_most: pass = a <= b; break;
  }
  return {std::move(metric), a, b, tolerance, relation, pass};
}

bool ValidationReport::passed() const {
  if (flagged) return false;
  return std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.pass; });
}

ValidationReport compare_mapping_vs_oracle(const Intersection& spec, Policy policy,
                                           const MappingCheckOptions& options) {
  if (spec.lane_count() != 2) throw std::invalid_argument("mapping check needs a two-lane spec");
  ValidationReport report;
  report.scenario = "mapping_vs_oracle";
  report.parameters = describe(spec);
  report.parameters.emplace_back("policy", std::string(to_string(policy)));
  report.parameters.emplace_back("stream_length", std::to_string(options.stream_length));
  report.parameters.emplace_back("trials", std::to_string(options.trials));
  report.parameters.emplace_back("seed", std::to_string(options.seed));

  double worst = 0.0;
  std::size_t mismatches = 0;
  std::size_t events = 0;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    RandomStream rng = RandomStream::derive(options.seed, trial);
    EquilibriumTracker oracle(spec, policy);
    const Lane first = sample_lane(rng, spec);
    double now = 0.0;
    oracle.push(now, first);
    DelayVector state = oracle.lane_delays();
    for (std::size_t i = 1; i < options.stream_length; ++i) {
      const ArrivalEvent ev = sample_event(rng, spec);
      const StepOutcome step = policy_step(policy, state, ev, spec);
      if (step.region.uncovered()) ++report.fallback_count;
      state = step.next;
      now += ev.gap;
      oracle.push(now, ev.lane);
      const double gap = max_abs_difference(state, oracle.lane_delays());
      worst = std::max(worst, gap);
      if (!(gap <= options.tolerance)) ++mismatches;
      ++events;
    }
  }
  report.comparisons.push_back(compare("max_discrepancy", worst, 0.0, options.tolerance));
  report.comparisons.push_back(compare("mismatched_events", static_cast<double>(mismatches), 0.0, 0.0));
  report.notes.push_back("events checked: " + std::to_string(events));
  return report;
}

double kolmogorov_distance(std::vector<double> delays, double lambda, double delta_d) {
  if (delays.empty()) throw std::invalid_argument("no delay samples");
  const SteadyStateSolution s = solve_steady_state(lambda, delta_d);
  auto cdf = [&](double t) { return delay_cdf(s, std::clamp(t, 0.0, delta_d)); };
  for (double& d : delays) d = std::clamp(d, 0.0, delta_d);
  std::sort(delays.begin(), delays.end());
  const double n = static_cast<double>(delays.size());
  double worst = 0.0;
  std::size_t i = 0;
  while (i < delays.size()) {
    std::size_t j = i;
    while (j < delays.size() && delays[j] == delays[i]) ++j;
    const double below = static_cast<double>(i) / n;
    const double at = static_cast<double>(j) / n;
    const double f = cdf(delays[i]);
    const double f_left = delays[i] <= 0.0 ? 0.0 : f;
    worst = std::max({worst, std::abs(at - f), std::abs(below - f_left)});
    i = j;
  }
  return worst;
}

ValidationReport compare_eds_vs_analytic(double lambda, double delta_d, const EdsCheckOptions& options) {
  const SteadyStateSolution solution = solve_steady_state(lambda, delta_d);
  const Intersection spec = two_lane_intersection(lambda / 2.0, lambda / 2.0, delta_d, 0.0);

  ValidationReport report;
  report.scenario = "eds_vs_analytic";
  report.parameters = describe(spec);
  report.parameters.emplace_back("policy", "fo");
  report.parameters.emplace_back("particles", std::to_string(options.particles));
  report.parameters.emplace_back("seed", std::to_string(options.seed));

  SteadyStateOptions run_options;
  run_options.particles = options.particles;
  run_options.seed = options.seed;
  run_options.tol = options.tol;
  run_options.max_iterations = options.max_iterations;
  run_options.bin_width = options.bin_width;
  run_options.threads = options.threads;
  SteadyStateRun run = run_to_steady_state(spec, Policy::fo, run_options);
  report.parameters.emplace_back("iterations_used", std::to_string(run.iterations_used));
  if (!run.converged) {
    report.flagged = true;
    report.notes.push_back("ensemble did not converge within " + std::to_string(options.max_iterations) +
                           " iterations; no comparison made");
    return report;
  }

  double zero = 0.0;
  double full = 0.0;
  std::vector<double> delays;
  delays.reserve(options.particles * options.measure_iterations);
  const PropagateOptions step{options.threads, nullptr};
  for (std::size_t it = 0; it < options.measure_iterations; ++it) {
    std::vector<DelaySample> samples;
    propagate(run.ensemble, 1, {step.threads, &samples});
    for (const auto& s : samples) delays.push_back(s.delay);
    zero += fraction_with_max_at(run.ensemble, 0.0);
    full += fraction_with_max_at(run.ensemble, delta_d);
  }
  const double m = static_cast<double>(std::max<std::size_t>(options.measure_iterations, 1));
  report.fallback_count = run.ensemble.fallback_count();
  report.comparisons.push_back(
      compare("probability_zero_delay", zero / m, 2.0 * solution.mass_at_zero, options.probability_tolerance));
  report.comparisons.push_back(compare("probability_delta_d_delay", full / m, 2.0 * solution.mass_at_delta_d,
                                       options.probability_tolerance));
  report.comparisons.push_back(compare("kolmogorov_distance", kolmogorov_distance(std::move(delays), lambda, delta_d),
                                       0.0, options.kolmogorov_tolerance));
  return report;
}

PolicyComparison run_policy_comparison(const Intersection& spec, std::size_t particles, std::size_t iteration,
                                       std::uint64_t seed, unsigned threads) {
  if (iteration == 0) throw std::invalid_argument("iteration starts at 1");
  PolicyComparison out;
  for (Policy policy : {Policy::fifo, Policy::fo}) {
    ParticleEnsemble ensemble = init_ensemble(particles, spec, policy, seed);
    std::vector<DelaySample> samples;
    propagate(ensemble, iteration - 1, {threads, &samples});
    double event_mean = 0.0;
    if (!samples.empty()) {
      std::vector<double> last;
      last.reserve(particles);
      for (std::size_t p = samples.size() - particles; p < samples.size(); ++p) last.push_back(samples[p].delay);
      event_mean = pairwise_sum(last) / static_cast<double>(particles);
    }
    const double total = mean_total_delay(ensemble);
    if (policy == Policy::fifo) {
      out.fifo_mean_total = total;
      out.fifo_mean_event_delay = event_mean;
    } else {
      out.fo_mean_total = total;
      out.fo_mean_event_delay = event_mean;
    }
  }
  return out;
}

ValidationReport compare_policies(const Intersection& spec, std::size_t particles, std::size_t iteration,
                                  std::uint64_t seed, unsigned threads) {
  if (spec.lane_count() != 2) throw std::invalid_argument("policy comparison needs a two-lane spec");
  const PolicyComparison r = run_policy_comparison(spec, particles, iteration, seed, threads);
  ValidationReport report;
  report.scenario = "policies";
  report.parameters = describe(spec);
  report.parameters.emplace_back("particles", std::to_string(particles));
  report.parameters.emplace_back("iteration", std::to_string(iteration));
  report.parameters.emplace_back("seed", std::to_string(seed));
  report.comparisons.push_back(compare("mean_total_delay_fo_vs_fifo", r.fo_mean_total, r.fifo_mean_total, 0.0,
                                       Relation::at_most));
  report.comparisons.push_back(compare("mean_event_delay_fo_vs_fifo", r.fo_mean_event_delay,
                                       r.fifo_mean_event_delay, 0.0, Relation::at_most));
  return report;
}

}  // namespace ixdelay
