#pragma once

#include <cstdint>

#include "ixdelay/intersection.hpp"

namespace ixdelay {

/// SplitMix64 generator. Eight bytes of state, so every particle can own an
/// independent stream; `derive` gives reproducible sub-streams keyed by an
/// integer (particle index, sweep cell, trial).
class RandomStream {
 public:
  using result_type = std::uint64_t;

  constexpr explicit RandomStream(std::uint64_t seed) noexcept : state_(seed) {}

  /// Sub-stream `key` of the stream seeded with `seed`.
  static RandomStream derive(std::uint64_t seed, std::uint64_t key) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double strictly inside (0, 1), 52-bit resolution (the largest
  /// value, 1 - 2^-53, is still representable below 1).
  double open_uniform() noexcept {
    return (static_cast<double>((*this)() >> 12) + 0.5) * 0x1.0p-52;
  }

  std::uint64_t state() const noexcept { return state_; }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// One arrival: the gap x_i to the previous vehicle's desired time and the
/// lane of the arriving vehicle.
struct ArrivalEvent {
  double gap = 0.0;
  Lane lane;
};

/// Draws the next arrival of the merged Poisson stream: gap ~ Exp(λ) by
/// inversion, lane k with probability λ_k / λ. Consumes exactly two draws.
ArrivalEvent sample_event(RandomStream& rng, const Intersection& spec);

/// Draws a lane alone (used for the first vehicle of a sequence).
Lane sample_lane(RandomStream& rng, const Intersection& spec);

/// Lazily generated, bit-reproducible sequence of arrivals for (seed, spec).
class EventStream {
 public:
  EventStream(Intersection spec, std::uint64_t seed) : spec_(std::move(spec)), rng_(seed), seed_(seed) {}

  ArrivalEvent next() { return sample_event(rng_, spec_); }

  const Intersection& spec() const noexcept { return spec_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  Intersection spec_;
  RandomStream rng_;
  std::uint64_t seed_;
};

}  // namespace ixdelay
