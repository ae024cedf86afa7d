#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ixdelay/intersection.hpp"

namespace ixdelay {

/// A vehicle as it enters the model: 1-based arrival index, desired passing
/// time t* and lane. Sequences must be strictly increasing in desired time.
struct VehicleRecord {
  std::size_t index = 0;
  double desired_time = 0.0;
  Lane lane;
};

/// Passing times of every vehicle at the equilibrium reached after the last
/// vehicle of the sequence arrived. `rank[j]` is the zero-based position of
/// vehicle j in the FO passing order of the last step; empty under FIFO.
struct EquilibriumResult {
  std::vector<double> passing_times;
  std::vector<std::size_t> rank;
};

/// A vehicle with its current passing time.
struct PlacedVehicle {
  std::size_t index = 0;
  double desired_time = 0.0;
  Lane lane;
  double passing_time = 0.0;
};

/// Adds `entrant` to a FIFO equilibrium. Earlier vehicles keep their times;
/// the entrant passes at max(t*, conflicting + Δd, same lane + Δs).
/// Returns the event delay (entrant's delay only, since nobody else moves).
double fifo_insert(std::vector<PlacedVehicle>& vehicles, const VehicleRecord& entrant,
                   const Intersection& spec);

/// Adds `entrant` to an FO equilibrium: the entrant gets its earliest
/// same-lane-feasible time, all vehicles are ranked by (current time, index)
/// and re-timed in rank order using the previous times as floors.
/// Returns the event delay: total shift of the existing vehicles plus the
/// entrant's own delay. If `rank` is non-null it receives the rank position
/// of each vehicle (parallel to `vehicles`).
double fo_insert(std::vector<PlacedVehicle>& vehicles, const VehicleRecord& entrant,
                 const Intersection& spec, std::vector<std::size_t>* rank = nullptr);

EquilibriumResult fifo_equilibrium(std::span<const VehicleRecord> vehicles, const Intersection& spec);

/// Replays the sequence one arrival at a time; never a single batch sort,
/// because each step uses the previous step's times as floors.
EquilibriumResult fo_equilibrium(std::span<const VehicleRecord> vehicles, const Intersection& spec);

EquilibriumResult equilibrium(Policy policy, std::span<const VehicleRecord> vehicles,
                              const Intersection& spec);

/// T^k = latest passing time in lane k minus the newest desired time.
/// Lanes without vehicles sit at -Δd; all components are clamped at -Δd.
DelayVector lane_delays(const EquilibriumResult& result, std::span<const VehicleRecord> vehicles,
                        const Intersection& spec);

/// Scalar delay added by the last vehicle of `vehicles`:
/// Σ_{j≤i} (after_j − before_j) + after_{i+1} − t*_{i+1}.
double event_delay(const EquilibriumResult& before, const EquilibriumResult& after,
                   std::span<const VehicleRecord> vehicles);

/// Builds vehicle records from desired times and 1-based lane numbers.
std::vector<VehicleRecord> make_vehicles(std::span<const double> desired_times,
                                         std::span<const std::size_t> lane_numbers);

/// Streaming equilibrium: arrivals are pushed one at a time. With `truncate`
/// set, vehicles whose passing time lies more than Δd + Δs before the newest
/// desired time are retired from the active set; they can no longer
/// constrain anybody, so results are unchanged.
class EquilibriumTracker {
 public:
  EquilibriumTracker(Intersection spec, Policy policy, bool truncate = true);

  /// Adds the next arrival and returns its event delay.
  double push(double desired_time, Lane lane);

  /// Lane delays relative to the newest desired time. Requires one arrival.
  DelayVector lane_delays() const;

  std::size_t vehicle_count() const noexcept { return count_; }
  std::size_t active_count() const noexcept { return active_.size(); }
  std::span<const PlacedVehicle> active() const noexcept { return active_; }
  double newest_desired_time() const noexcept { return newest_; }
  const Intersection& spec() const noexcept { return spec_; }
  Policy policy() const noexcept { return policy_; }

 private:
  void retire_stale();

  Intersection spec_;
  Policy policy_;
  bool truncate_;
  std::vector<PlacedVehicle> active_;
  std::vector<double> retired_lane_max_;
  std::size_t count_ = 0;
  double newest_ = 0.0;
};

}  // namespace ixdelay
