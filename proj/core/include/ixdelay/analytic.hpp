#pragma once

#include <span>
#include <vector>

namespace ixdelay {

/// Largest λΔd accepted by the closed forms.
inline constexpr double kMaxLoad = 50.0;

/// Closed-form FO steady state for two symmetric lanes (λ/2 each) and
/// Δs = 0. g is half the density of the larger lane delay; it has a smooth
/// part g̃(t) = C e^{λt/2} on (0, Δd) and point masses at 0 and Δd.
struct SteadyStateSolution {
  double lambda = 0.0;  ///< total rate λ [1/s]
  double delta_d = 0.0;
  double c = 0.0;
  double mass_at_zero = 0.0;     ///< ĝ(0)
  double mass_at_delta_d = 0.0;  ///< ĝ(Δd)

  double load() const noexcept { return lambda * delta_d; }

  /// g̃(t) for t in [0, Δd]; 0 elsewhere.
  double finite_density(double t) const;

  /// ∫₀^{Δd} g̃(t) dt.
  double finite_mass() const;
};

/// Throws std::invalid_argument for non-positive or non-finite parameters
/// and std::range_error for λΔd > 50.
SteadyStateSolution solve_steady_state(double lambda, double delta_d);

struct PointMassRow {
  double load = 0.0;       ///< λΔd
  double zero = 0.0;       ///< 2ĝ(0), probability of no delay
  double delta_d = 0.0;    ///< 2ĝ(Δd), probability of delay Δd
};

std::vector<PointMassRow> point_mass_curves(std::span<const double> load_grid);

/// Steady-state CDF of the per-event delay for t in [0, Δd]. P_d(0) = 2ĝ(0),
/// P_d(Δd) = 1. Throws std::domain_error outside [0, Δd].
double delay_cdf(const SteadyStateSolution& solution, double t);

/// E(d) = Δd/2 + (e^{−λΔd} − 1) / (2λ(e^{λΔd/2} + e^{−λΔd/2} − 1)).
double expected_delay(double lambda, double delta_d);

/// Low-flow approximation λΔd²/4.
double low_flow_approx(double lambda, double delta_d);

}  // namespace ixdelay
