#include "ixdelay/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ixdelay {
namespace {

void check_parameters(double lambda, double delta_d) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be positive and finite, got " + std::to_string(lambda));
  }
  if (!(delta_d > 0.0) || !std::isfinite(delta_d)) {
    throw std::invalid_argument("delta_d must be positive and finite, got " + std::to_string(delta_d));
  }
  if (lambda * delta_d > kMaxLoad) {
    throw std::range_error("lambda * delta_d = " + std::to_string(lambda * delta_d) + " exceeds " +
                           std::to_string(kMaxLoad));
  }
}

// e^{-a/2}(e^{a/2} + e^{-a/2} - 1) = 1 + e^{-a} - e^{-a/2}
double scaled_denominator(double a) { return 1.0 + std::exp(-a) - std::exp(-0.5 * a); }

}  // namespace

double SteadyStateSolution::finite_density(double t) const {
  if (t < 0.0 || t > delta_d) return 0.0;
  return c * std::exp(0.5 * lambda * t);
}

double SteadyStateSolution::finite_mass() const {
  return 2.0 * c / lambda * std::expm1(0.5 * lambda * delta_d);
}

SteadyStateSolution solve_steady_state(double lambda, double delta_d) {
  check_parameters(lambda, delta_d);
  const double a = lambda * delta_d;
  const double dp = scaled_denominator(a);
  SteadyStateSolution s;
  s.lambda = lambda;
  s.delta_d = delta_d;
  s.c = lambda * (1.0 + std::exp(-a)) * std::exp(-0.5 * a) / (8.0 * dp);
  s.mass_at_zero = 2.0 * s.c / lambda;
  const double head = -std::expm1(-0.5 * a);
  s.mass_at_delta_d = head * head / (4.0 * dp);
  return s;
}

std::vector<PointMassRow> point_mass_curves(std::span<const double> load_grid) {
  std::vector<PointMassRow> rows;
  rows.reserve(load_grid.size());
  for (double load : load_grid) {
    const SteadyStateSolution s = solve_steady_state(load, 1.0);
    rows.push_back({load, 2.0 * s.mass_at_zero, 2.0 * s.mass_at_delta_d});
  }
  return rows;
}

double delay_cdf(const SteadyStateSolution& s, double t) {
  if (!(t >= 0.0 && t <= s.delta_d)) {
    throw std::domain_error("delay_cdf needs t in [0, " + std::to_string(s.delta_d) + "], got " +
                            std::to_string(t));
  }
  const double a = s.load();
  const double lt = s.lambda * t;
  // (4C/λ)·e^{a/2} = (1 + e^{-a}) / (2(1 + e^{-a} - e^{-a/2}))
  const double scale = (1.0 + std::exp(-a)) / (2.0 * scaled_denominator(a));
  const double bracket = std::exp(0.5 * (lt - a)) - std::exp(-0.5 * lt) + std::exp(-lt);
  return scale * bracket - 0.5 * std::expm1(-lt);
}

double expected_delay(double lambda, double delta_d) {
  check_parameters(lambda, delta_d);
  const double a = lambda * delta_d;
  // E = Δd [D − (1 − e^{−a})/a] / (2D), D = 1 + 4 sinh²(a/4)
  const double sh = std::sinh(0.25 * a);
  const double d = 1.0 + 4.0 * sh * sh;
  const double lead =
      a < 1e-4 ? a / 2.0 - a * a / 6.0 + a * a * a / 24.0 - a * a * a * a / 120.0 : 1.0 + std::expm1(-a) / a;
  return delta_d * (lead + 4.0 * sh * sh) / (2.0 * d);
}

double low_flow_approx(double lambda, double delta_d) {
  check_parameters(lambda, delta_d);
  return lambda * delta_d * delta_d / 4.0;
}

}  // namespace ixdelay
