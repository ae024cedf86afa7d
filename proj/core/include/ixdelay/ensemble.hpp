#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ixdelay/event_stream.hpp"
#include "ixdelay/intersection.hpp"
#include "ixdelay/step_map.hpp"

namespace ixdelay {

/// Scalar delay of one event for one particle.
struct DelaySample {
  std::size_t iteration = 0;  ///< iteration the event produced
  std::size_t particle = 0;
  double delay = 0.0;
  RegionLabel region;
};

struct PropagateOptions;

/// N particles, each a DelayVector, stored row-major (N x K). Particle p
/// draws its arrivals from RandomStream::derive(seed, p), so two ensembles
/// built with the same seed see identical event streams.
class ParticleEnsemble {
 public:
  ParticleEnsemble(Intersection spec, Policy policy, std::size_t particles, std::uint64_t seed);

  std::size_t size() const noexcept { return streams_.size(); }
  std::size_t lane_count() const noexcept { return spec_.lane_count(); }
  std::size_t iteration() const noexcept { return iteration_; }
  std::uint64_t seed() const noexcept { return seed_; }
  Policy policy() const noexcept { return policy_; }
  const Intersection& spec() const noexcept { return spec_; }

  std::span<const double> particle(std::size_t p) const;
  std::span<double> particle(std::size_t p);
  DelayVector delay_vector(std::size_t p) const;
  std::span<const double> data() const noexcept { return data_; }

  /// Number of FO steps that went through the replay fallback so far.
  std::uint64_t fallback_count() const noexcept { return fallbacks_; }

 private:
  friend void propagate(ParticleEnsemble&, std::size_t, const PropagateOptions&);

  Intersection spec_;
  Policy policy_;
  std::uint64_t seed_;
  std::size_t iteration_ = 1;
  std::vector<double> data_;
  std::vector<RandomStream> streams_;
  std::uint64_t fallbacks_ = 0;
};

/// floor(P_s(k)·N + 1e-9) particles start with only lane k occupied
/// (0 there, -Δd elsewhere); the rounding remainder goes to the last lane
/// with a positive rate. Iteration is 1. Throws std::invalid_argument for
/// N = 0 or Δs > Δd.
ParticleEnsemble init_ensemble(std::size_t particles, const Intersection& spec, Policy policy,
                               std::uint64_t seed);

struct PropagateOptions {
  unsigned threads = 1;
  /// When set, receives steps·N samples ordered by (event, particle).
  std::vector<DelaySample>* samples = nullptr;
};

/// Advances every particle by `steps` events. Results do not depend on the
/// thread count.
void propagate(ParticleEnsemble& ensemble, std::size_t steps, const PropagateOptions& options = {});

/// Mean over particles of Σ_k T^k, summed pairwise for order independence.
double mean_total_delay(const ParticleEnsemble& ensemble);

/// Mean over particles of max_k T^k.
double mean_max_delay(const ParticleEnsemble& ensemble);

/// Fraction of particles with max_k T^k within `tolerance` of `value`.
double fraction_with_max_at(const ParticleEnsemble& ensemble, double value, double tolerance = 1e-9);

/// Fraction of particles whose component `lane` is ≤ `value`.
double fraction_lane_at_most(const ParticleEnsemble& ensemble, Lane lane, double value);

/// Pairwise (tree) summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

}  // namespace ixdelay
