#include "ixdelay/event_stream.hpp"

#include <cmath>

namespace ixdelay {

RandomStream RandomStream::derive(std::uint64_t seed, std::uint64_t key) noexcept {
  return RandomStream(mix(seed ^ mix(key + 0x632be59bd9b4e019ULL)));
}

Lane sample_lane(RandomStream& rng, const Intersection& spec) {
  const double target = rng.open_uniform() * spec.total_rate();
  const auto rates = spec.rates();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < rates.size(); ++k) {
    if (rates[k] <= 0.0) continue;
    last_positive = k;
    cumulative += rates[k];
    if (target < cumulative) return Lane::from_index(k);
  }
  // round-off at the top of the cumulative sum
  return Lane::from_index(last_positive);
}

ArrivalEvent sample_event(RandomStream& rng, const Intersection& spec) {
  ArrivalEvent event;
  event.gap = -std::log(rng.open_uniform()) / spec.total_rate();
  event.lane = sample_lane(rng, spec);
  return event;
}

}  // namespace ixdelay
