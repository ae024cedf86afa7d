#include "ixdelay/equilibrium.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ixdelay {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_sequence(std::span<const VehicleRecord> vehicles, const Intersection& spec) {
  for (std::size_t j = 0; j < vehicles.size(); ++j) {
    if (vehicles[j].lane.index() >= spec.lane_count()) {
      throw std::out_of_range("vehicle " + std::to_string(vehicles[j].index) +
                              " uses lane " + std::to_string(vehicles[j].lane.number()) +
                              " of a " + std::to_string(spec.lane_count()) + "-lane intersection");
    }
    if (j > 0 && !(vehicles[j].desired_time > vehicles[j - 1].desired_time)) {
      throw std::invalid_argument("desired times must be strictly increasing (vehicle " +
                                  std::to_string(vehicles[j].index) + ")");
    }
  }
}

// Earliest time `lane` may pass given the latest passing time per lane.
double earliest_after(const std::vector<double>& lane_max, Lane lane, double floor,
                      const Intersection& spec) {
  double t = std::max(floor, lane_max[lane.index()] + spec.delta_s());
  for (std::size_t other = 0; other < lane_max.size(); ++other) {
    if (spec.conflicts(lane, Lane::from_index(other))) {
      t = std::max(t, lane_max[other] + spec.delta_d());
    }
  }
  return t;
}

}  // namespace

double fifo_insert(std::vector<PlacedVehicle>& vehicles, const VehicleRecord& entrant,
                   const Intersection& spec) {
  std::vector<double> lane_max(spec.lane_count(), kNegInf);
  for (const auto& v : vehicles) {
    lane_max[v.lane.index()] = std::max(lane_max[v.lane.index()], v.passing_time);
  }
  const double t = earliest_after(lane_max, entrant.lane, entrant.desired_time, spec);
  vehicles.push_back({entrant.index, entrant.desired_time, entrant.lane, t});
  return t - entrant.desired_time;
}

double fo_insert(std::vector<PlacedVehicle>& vehicles, const VehicleRecord& entrant,
                 const Intersection& spec, std::vector<std::size_t>* rank) {
  double candidate = entrant.desired_time;
  for (const auto& v : vehicles) {
    if (v.lane == entrant.lane) candidate = std::max(candidate, v.passing_time + spec.delta_s());
  }
  vehicles.push_back({entrant.index, entrant.desired_time, entrant.lane, candidate});

  std::vector<std::size_t> order(vehicles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& va = vehicles[a];
    const auto& vb = vehicles[b];
    if (va.passing_time != vb.passing_time) return va.passing_time < vb.passing_time;
    return va.index < vb.index;
  });

  if (rank != nullptr) rank->assign(vehicles.size(), 0);
  std::vector<double> lane_max(spec.lane_count(), kNegInf);
  const std::size_t entrant_slot = vehicles.size() - 1;
  double shift = 0.0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    auto& v = vehicles[order[pos]];
    const double t = earliest_after(lane_max, v.lane, v.passing_time, spec);
    if (order[pos] != entrant_slot) shift += t - v.passing_time;
    v.passing_time = t;
    lane_max[v.lane.index()] = std::max(lane_max[v.lane.index()], t);
    if (rank != nullptr) (*rank)[order[pos]] = pos;
  }
  return shift + vehicles[entrant_slot].passing_time - entrant.desired_time;
}

EquilibriumResult fifo_equilibrium(std::span<const VehicleRecord> vehicles, const Intersection& spec) {
  check_sequence(vehicles, spec);
  std::vector<PlacedVehicle> placed;
  placed.reserve(vehicles.size());
  for (const auto& v : vehicles) fifo_insert(placed, v, spec);
  EquilibriumResult result;
  result.passing_times.reserve(placed.size());
  for (const auto& p : placed) result.passing_times.push_back(p.passing_time);
  return result;
}

EquilibriumResult fo_equilibrium(std::span<const VehicleRecord> vehicles, const Intersection& spec) {
  check_sequence(vehicles, spec);
  std::vector<PlacedVehicle> placed;
  placed.reserve(vehicles.size());
  EquilibriumResult result;
  for (const auto& v : vehicles) fo_insert(placed, v, spec, &result.rank);
  result.passing_times.reserve(placed.size());
  for (const auto& p : placed) result.passing_times.push_back(p.passing_time);
  return result;
}

EquilibriumResult equilibrium(Policy policy, std::span<const VehicleRecord> vehicles,
                              const Intersection& spec) {
  return policy == Policy::fifo ? fifo_equilibrium(vehicles, spec) : fo_equilibrium(vehicles, spec);
}

DelayVector lane_delays(const EquilibriumResult& result, std::span<const VehicleRecord> vehicles,
                        const Intersection& spec) {
  if (vehicles.empty() || result.passing_times.empty()) {
    throw std::invalid_argument("lane delays need at least one vehicle");
  }
  if (result.passing_times.size() != vehicles.size()) {
    throw std::invalid_argument("equilibrium and vehicle sequence differ in length");
  }
  const double floor = -spec.delta_d();
  const double newest = vehicles.back().desired_time;
  std::vector<double> delays(spec.lane_count(), floor);
  for (std::size_t j = 0; j < vehicles.size(); ++j) {
    auto& slot = delays.at(vehicles[j].lane.index());
    slot = std::max(slot, result.passing_times[j] - newest);
  }
  return DelayVector(std::move(delays));
}

double event_delay(const EquilibriumResult& before, const EquilibriumResult& after,
                   std::span<const VehicleRecord> vehicles) {
  const std::size_t n = before.passing_times.size();
  if (after.passing_times.size() != n + 1 || vehicles.size() != n + 1) {
    throw std::invalid_argument("event delay needs an equilibrium extended by exactly one vehicle");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) total += after.passing_times[j] - before.passing_times[j];
  return total + after.passing_times[n] - vehicles[n].desired_time;
}

std::vector<VehicleRecord> make_vehicles(std::span<const double> desired_times,
                                         std::span<const std::size_t> lane_numbers) {
  if (desired_times.size() != lane_numbers.size()) {
    throw std::invalid_argument("desired times and lanes differ in length");
  }
  std::vector<VehicleRecord> out;
  out.reserve(desired_times.size());
  for (std::size_t j = 0; j < desired_times.size(); ++j) {
    if (lane_numbers[j] == 0) throw std::invalid_argument("lane numbers start at 1");
    out.push_back({j + 1, desired_times[j], Lane::from_number(lane_numbers[j])});
  }
  return out;
}

EquilibriumTracker::EquilibriumTracker(Intersection spec, Policy policy, bool truncate)
    : spec_(std::move(spec)),
      policy_(policy),
      truncate_(truncate),
      retired_lane_max_(spec_.lane_count(), kNegInf) {}

double EquilibriumTracker::push(double desired_time, Lane lane) {
  if (lane.index() >= spec_.lane_count()) throw std::out_of_range("lane out of range");
  if (count_ > 0 && !(desired_time > newest_)) {
    throw std::invalid_argument("desired times must be strictly increasing");
  }
  const VehicleRecord entrant{count_ + 1, desired_time, lane};
  const double delay = policy_ == Policy::fifo ? fifo_insert(active_, entrant, spec_)
                                               : fo_insert(active_, entrant, spec_);
  ++count_;
  newest_ = desired_time;
  if (truncate_) retire_stale();
  return delay;
}

void EquilibriumTracker::retire_stale() {
  const double horizon = newest_ - (spec_.delta_d() + spec_.delta_s());
  std::erase_if(active_, [&](const PlacedVehicle& v) {
    if (v.passing_time < horizon) {
      auto& slot = retired_lane_max_[v.lane.index()];
      slot = std::max(slot, v.passing_time);
      return true;
    }
    return false;
  });
}

DelayVector EquilibriumTracker::lane_delays() const {
  if (count_ == 0) throw std::logic_error("no vehicles yet");
  const double floor = -spec_.delta_d();
  std::vector<double> delays(spec_.lane_count(), floor);
  for (std::size_t k = 0; k < delays.size(); ++k) {
    delays[k] = std::max(floor, retired_lane_max_[k] - newest_);
  }
  for (const auto& v : active_) {
    auto& slot = delays[v.lane.index()];
    slot = std::max(slot, v.passing_time - newest_);
  }
  return DelayVector(std::move(delays));
}

}  // namespace ixdelay
