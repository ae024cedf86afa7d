#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ixdelay/intersection.hpp"

namespace ixdelay {

enum class Relation {
  within,    ///< |a − b| ≤ tolerance
  below,     ///< a < b
  at_most,   ///< a ≤ b
};

std::string_view to_string(Relation relation) noexcept;

struct Comparison {
  std::string metric;
  double value_a = 0.0;
  double value_b = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::within;
  bool pass = false;
};

/// Builds a comparison with `pass` computed from the relation.
Comparison compare(std::string metric, double a, double b, double tolerance, Relation relation = Relation::within);

struct ValidationReport {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Comparison> comparisons;
  std::uint64_t fallback_count = 0;
  /// Set when the comparison could not be made (e.g. the EDS run did not
  /// converge); such a report does not pass.
  bool flagged = false;
  std::vector<std::string> notes;

  bool passed() const;
};

struct MappingCheckOptions {
  std::size_t stream_length = 200;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

/// Per trial: iterates the closed-form step map along a sampled event stream
/// and recomputes the equilibrium of every prefix with the micro policy.
/// Reports the max componentwise discrepancy, the number of events above
/// tolerance and the FO fallback count.
ValidationReport compare_mapping_vs_oracle(const Intersection& spec, Policy policy,
                                           const MappingCheckOptions& options);

struct EdsCheckOptions {
  std::size_t particles = 10000;
  std::uint64_t seed = 1;
  double tol = 0.1;
  std::size_t max_iterations = 300;
  std::size_t measure_iterations = 10;
  double bin_width = 0.1;
  double probability_tolerance = 0.02;
  double kolmogorov_tolerance = 0.02;
  unsigned threads = 1;
};

/// FO, Δs = 0, lanes at λ/2 each: runs the ensemble to steady state, then
/// compares the fraction of particles with max delay 0 and Δd and the
/// empirical per-event delay CDF (Kolmogorov distance) with the closed form.
ValidationReport compare_eds_vs_analytic(double lambda, double delta_d, const EdsCheckOptions& options);

/// Kolmogorov distance between the sorted sample and the closed-form CDF
/// (values below 0 count as 0, above Δd as Δd).
double kolmogorov_distance(std::vector<double> delays, double lambda, double delta_d);

struct PolicyComparison {
  double fifo_mean_total = 0.0;
  double fo_mean_total = 0.0;
  double fifo_mean_event_delay = 0.0;
  double fo_mean_event_delay = 0.0;
};

/// Common-random-number FIFO and FO ensembles propagated to `iteration`.
PolicyComparison run_policy_comparison(const Intersection& spec, std::size_t particles, std::size_t iteration,
                                       std::uint64_t seed, unsigned threads = 1);

ValidationReport compare_policies(const Intersection& spec, std::size_t particles, std::size_t iteration,
                                  std::uint64_t seed, unsigned threads = 1);

}  // namespace ixdelay
