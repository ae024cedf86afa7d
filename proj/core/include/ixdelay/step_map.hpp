#pragma once

#include <cstdint>
#include <vector>

#include "ixdelay/event_stream.hpp"
#include "ixdelay/intersection.hpp"

namespace ixdelay {

inline constexpr int kFifoRegionCount = 4;
inline constexpr int kFoRegionCount = 8;

/// Tolerance on the closed interval T²−T¹ ∈ [Δd, Δd+Δs] of FO region 6.
/// With Δs = 0 reachable states sit exactly on T²−T¹ = Δd, so round-off
/// would otherwise push them out of every row.
inline constexpr double kBoundaryTolerance = 1e-9;

/// Which smooth piece of the one-event map was applied. Ids follow the
/// table rows for an event in lane 1 (lane-2 events swap the roles).
/// Id 0 marks the FO band that no printed row covers; it is resolved by
/// replaying the micro policy on the reconstructed history.
struct RegionLabel {
  Policy policy = Policy::fifo;
  std::uint8_t id = 1;

  static constexpr std::uint8_t kUncovered = 0;
  /// K > 2: no table, the step came from the general map or a replay.
  static constexpr std::uint8_t kGeneral = 255;

  bool uncovered() const noexcept { return id == kUncovered; }
  friend bool operator==(RegionLabel, RegionLabel) = default;
};

struct StepOutcome {
  DelayVector next;
  RegionLabel region;
};

/// Two-lane kernel on (ego, other) delays; used by the ensemble hot loop.
struct PairStep {
  double ego = 0.0;
  double other = 0.0;
  std::uint8_t region = 1;
};

PairStep fifo_pair_step(double ego, double other, double gap, double delta_d, double delta_s);
PairStep fo_pair_step(double ego, double other, double gap, double delta_d, double delta_s);

/// Region lookup for a two-lane state. Measure-zero ties go to the lower id.
/// Throws ConsistencyError for states no row covers (outside the reachable
/// set) and std::invalid_argument for K != 2.
///
/// All functions that read a floored delay vector, here and below, throw
/// std::invalid_argument when Δs > Δd: the -Δd floor would then hide how
/// long ago the ego lane last passed.
RegionLabel classify_region(const DelayVector& delays, double gap, Lane lane,
                            const Intersection& spec, Policy policy);

/// Every printed row whose domain contains the state, without tie
/// handling; used to check that the rows partition the state space.
std::vector<std::uint8_t> matching_regions(const DelayVector& delays, double gap, Lane lane,
                                           const Intersection& spec, Policy policy);

/// True when the two-lane state can arise from the dynamics: the newest
/// vehicle's lane has delay ≥ 0 and the lanes are at least Δd apart.
bool is_reachable(const DelayVector& delays, const Intersection& spec);

/// One event under FIFO (two lanes), clamped at -Δd.
StepOutcome fifo_step(const DelayVector& delays, const ArrivalEvent& event, const Intersection& spec);

/// One event under FO (two lanes), clamped at -Δd.
StepOutcome fo_step(const DelayVector& delays, const ArrivalEvent& event, const Intersection& spec);

StepOutcome policy_step(Policy policy, const DelayVector& delays, const ArrivalEvent& event,
                        const Intersection& spec);

/// FIFO for any conflict graph: the ego lane gets
/// max(0, T^s + Δs − x, max_{j conflicting} T^j + Δd − x), every other lane
/// shifts by −x; all clamped.
DelayVector fifo_step_general(const DelayVector& delays, const ArrivalEvent& event,
                              const Intersection& spec);

/// FO for any conflict graph by replaying the micro policy on a history made
/// of one vehicle per unclamped lane, placed at its lane delay.
DelayVector fo_step_replay(const DelayVector& delays, const ArrivalEvent& event,
                           const Intersection& spec);

/// Per-event scalar delay from consecutive states: the ego lane's new delay
/// plus the shift each other lane's last vehicle received. Lanes the event
/// did not touch contribute exactly zero.
double state_event_delay(const DelayVector& before, const DelayVector& after,
                         const ArrivalEvent& event, const Intersection& spec);

}  // namespace ixdelay
