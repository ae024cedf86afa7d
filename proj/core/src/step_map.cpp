#include "ixdelay/step_map.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ixdelay/equilibrium.hpp"
#include "ixdelay/error.hpp"

namespace ixdelay {
namespace {

using Mask = unsigned;

Mask fifo_matches(double e, double o, double x, double dd, double ds, bool tie_as_below) {
  const bool below = tie_as_below ? o <= e : o < e;
  Mask m = 0;
  if (e < x - ds && o < x - dd) m |= 1u << 1;
  if (e >= x - ds && o < x - dd && below) m |= 1u << 2;
  if (o >= x - dd && below) m |= 1u << 3;
  if (o >= x - dd && o > e) m |= 1u << 4;
  return m;
}

bool in_sliver(double e, double o, double x, double dd, double ds) {
  const double d = o - e;
  return e >= x - ds && d > dd + ds + kBoundaryTolerance && d <= x + dd + ds;
}

Mask fo_matches(double e, double o, double x, double dd, double ds, bool tie_as_below) {
  const bool below = tie_as_below ? o <= e : o < e;
  const double d = o - e;
  Mask m = 0;
  if (e < x - ds && o < x - dd) m |= 1u << 1;
  if (e >= x - ds && o < x - dd && below) m |= 1u << 2;
  if (o >= x - dd && below) m |= 1u << 3;
  if (o >= x - dd && o < x && o > e) m |= 1u << 4;
  if (o >= x && o < x + dd && e < x - ds) m |= 1u << 5;
  if (d >= dd - kBoundaryTolerance && d <= dd + ds + kBoundaryTolerance && e >= x - ds) m |= 1u << 6;
  if (e < x - ds && o >= x + dd) m |= 1u << 7;
  if (d > x + dd + ds && e >= x - ds) m |= 1u << 8;
  return m;
}

std::uint8_t lowest(Mask m) { return static_cast<std::uint8_t>(std::countr_zero(m)); }

std::uint8_t fifo_region(double e, double o, double x, double dd, double ds) {
  Mask m = fifo_matches(e, o, x, dd, ds, false);
  if (m == 0 && o == e) m = fifo_matches(e, o, x, dd, ds, true);
  if (m == 0) {
    throw ConsistencyError("no FIFO region covers state (" + std::to_string(e) + ", " +
                           std::to_string(o) + ") with gap " + std::to_string(x));
  }
  return lowest(m);
}

std::uint8_t fo_region(double e, double o, double x, double dd, double ds) {
  Mask m = fo_matches(e, o, x, dd, ds, false);
  if (m == 0 && o == e) m = fo_matches(e, o, x, dd, ds, true);
  if (m != 0) return lowest(m);
  if (in_sliver(e, o, x, dd, ds)) return RegionLabel::kUncovered;
  throw ConsistencyError("no FO region covers state (" + std::to_string(e) + ", " +
                         std::to_string(o) + ") with gap " + std::to_string(x));
}

PairStep clamp(PairStep s, double dd) {
  s.ego = std::max(s.ego, -dd);
  s.other = std::max(s.other, -dd);
  return s;
}

PairStep fifo_values(std::uint8_t region, double e, double o, double x, double dd, double ds) {
  switch (region) {
    case 1: return {0.0, -dd, region};
    case 2: return {e + ds - x, -dd, region};
    case 3: return {e + ds - x, o - x, region};
    default: return {o + dd - x, o - x, region};
  }
}

// Two-vehicle FO replay: the last vehicle of each lane at its delay, the
// entrant at the gap. Only used for the band no printed row covers.
PairStep fo_pair_replay(double e, double o, double x, double dd, double ds) {
  const Intersection spec = two_lane_intersection(1.0, 1.0, dd, ds);
  const DelayVector next = fo_step_replay(DelayVector{e, o}, ArrivalEvent{x, Lane::from_index(0)}, spec);
  return {next.at(0), next.at(1), RegionLabel::kUncovered};
}

void require_two_lanes(const Intersection& spec) {
  if (spec.lane_count() != 2) {
    throw std::invalid_argument("closed-form two-lane map needs K = 2, got K = " +
                                std::to_string(spec.lane_count()));
  }
}

void require_lossless_floor(const Intersection& spec) {
  if (spec.delta_s() > spec.delta_d()) {
    throw std::invalid_argument("lane delays are floored at -delta_d, which drops the same-lane gap when delta_s > "
                                "delta_d; the delay-vector model needs delta_s <= delta_d");
  }
}

void require_lane(const Intersection& spec, Lane lane) {
  if (lane.index() >= spec.lane_count()) {
    throw std::out_of_range("lane " + std::to_string(lane.number()) + " out of range");
  }
}

StepOutcome to_outcome(PairStep s, Lane lane, Policy policy) {
  const bool first = lane.index() == 0;
  return {first ? DelayVector{s.ego, s.other} : DelayVector{s.other, s.ego}, {policy, s.region}};
}

}  // namespace

PairStep fifo_pair_step(double e, double o, double x, double dd, double ds) {
  return clamp(fifo_values(fifo_region(e, o, x, dd, ds), e, o, x, dd, ds), dd);
}

PairStep fo_pair_step(double e, double o, double x, double dd, double ds) {
  const std::uint8_t region = fo_region(e, o, x, dd, ds);
  switch (region) {
    case RegionLabel::kUncovered: return clamp(fo_pair_replay(e, o, x, dd, ds), dd);
    case 5: return clamp({0.0, dd, region}, dd);
    case 6: return clamp({e - x + ds, e - x + ds + dd, region}, dd);
    case 7: return clamp({0.0, o - x, region}, dd);
    case 8: return clamp({e - x + ds, o - x, region}, dd);
    default: return clamp(fifo_values(region, e, o, x, dd, ds), dd);
  }
}

RegionLabel classify_region(const DelayVector& delays, double gap, Lane lane,
                            const Intersection& spec, Policy policy) {
  require_two_lanes(spec);
  require_lossless_floor(spec);
  require_lane(spec, lane);
  const double e = delays.at(lane.index());
  const double o = delays.at(1 - lane.index());
  const double dd = spec.delta_d();
  const double ds = spec.delta_s();
  return {policy, policy == Policy::fifo ? fifo_region(e, o, gap, dd, ds) : fo_region(e, o, gap, dd, ds)};
}

std::vector<std::uint8_t> matching_regions(const DelayVector& delays, double gap, Lane lane,
                                           const Intersection& spec, Policy policy) {
  require_two_lanes(spec);
  require_lossless_floor(spec);
  require_lane(spec, lane);
  const double e = delays.at(lane.index());
  const double o = delays.at(1 - lane.index());
  const double dd = spec.delta_d();
  const double ds = spec.delta_s();
  const Mask m = policy == Policy::fifo ? fifo_matches(e, o, gap, dd, ds, false) : fo_matches(e, o, gap, dd, ds, false);
  std::vector<std::uint8_t> out;
  for (std::uint8_t id = 1; id <= kFoRegionCount; ++id) {
    if (m & (1u << id)) out.push_back(id);
  }
  return out;
}

bool is_reachable(const DelayVector& delays, const Intersection& spec) {
  require_two_lanes(spec);
  const double dd = spec.delta_d();
  const double a = delays.at(0);
  const double b = delays.at(1);
  return a >= -dd && b >= -dd && std::max(a, b) >= 0.0 && std::abs(a - b) >= dd - kBoundaryTolerance;
}

StepOutcome fifo_step(const DelayVector& delays, const ArrivalEvent& event, const Intersection& spec) {
  require_two_lanes(spec);
  require_lossless_floor(spec);
  require_lane(spec, event.lane);
  const double e = delays.at(event.lane.index());
  const double o = delays.at(1 - event.lane.index());
  return to_outcome(fifo_pair_step(e, o, event.gap, spec.delta_d(), spec.delta_s()), event.lane,
                    Policy::fifo);
}

StepOutcome fo_step(const DelayVector& delays, const ArrivalEvent& event, const Intersection& spec) {
  require_two_lanes(spec);
  require_lossless_floor(spec);
  require_lane(spec, event.lane);
  const double e = delays.at(event.lane.index());
  const double o = delays.at(1 - event.lane.index());
  return to_outcome(fo_pair_step(e, o, event.gap, spec.delta_d(), spec.delta_s()), event.lane,
                    Policy::fo);
}

StepOutcome policy_step(Policy policy, const DelayVector& delays, const ArrivalEvent& event,
                        const Intersection& spec) {
  return policy == Policy::fifo ? fifo_step(delays, event, spec) : fo_step(delays, event, spec);
}

DelayVector fifo_step_general(const DelayVector& delays, const ArrivalEvent& event,
                              const Intersection& spec) {
  require_lossless_floor(spec);
  require_lane(spec, event.lane);
  if (delays.size() != spec.lane_count()) throw std::invalid_argument("delay vector size != K");
  const double dd = spec.delta_d();
  const double x = event.gap;
  std::vector<double> next(delays.size());
  double ego = std::max(0.0, delays[event.lane] + spec.delta_s() - x);
  for (std::size_t k = 0; k < delays.size(); ++k) {
    const Lane lane = Lane::from_index(k);
    if (lane == event.lane) continue;
    if (spec.conflicts(lane, event.lane)) ego = std::max(ego, delays[lane] + dd - x);
    next[k] = std::max(delays[lane] - x, -dd);
  }
  next[event.lane.index()] = std::max(ego, -dd);
  return DelayVector(std::move(next));
}

DelayVector fo_step_replay(const DelayVector& delays, const ArrivalEvent& event,
                           const Intersection& spec) {
  require_lossless_floor(spec);
  require_lane(spec, event.lane);
  if (delays.size() != spec.lane_count()) throw std::invalid_argument("delay vector size != K");
  const double dd = spec.delta_d();

  std::vector<PlacedVehicle> history;
  for (std::size_t k = 0; k < delays.size(); ++k) {
    const double t = delays.at(k);
    if (t > -dd) history.push_back({0, t, Lane::from_index(k), t});
  }
  std::sort(history.begin(), history.end(),
            [](const PlacedVehicle& a, const PlacedVehicle& b) { return a.passing_time < b.passing_time; });
  for (std::size_t j = 0; j < history.size(); ++j) history[j].index = j + 1;

  const VehicleRecord entrant{history.size() + 1, event.gap, event.lane};
  fo_insert(history, entrant, spec);

  std::vector<double> next(delays.size());
  for (std::size_t k = 0; k < delays.size(); ++k) next[k] = std::max(delays.at(k) - event.gap, -dd);
  for (const auto& v : history) {
    auto& slot = next[v.lane.index()];
    slot = std::max(slot, v.passing_time - event.gap);
  }
  return DelayVector(std::move(next));
}

double state_event_delay(const DelayVector& before, const DelayVector& after,
                         const ArrivalEvent& event, const Intersection& spec) {
  const double dd = spec.delta_d();
  double total = after[event.lane];
  for (std::size_t k = 0; k < after.size(); ++k) {
    if (k == event.lane.index()) continue;
    total += after.at(k) - std::max(before.at(k) - event.gap, -dd);
  }
  return total;
}

}  // namespace ixdelay
