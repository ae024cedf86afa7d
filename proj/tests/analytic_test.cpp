#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ixdelay/analytic.hpp"

using namespace ixdelay;
using boost::math::quadrature::gauss_kronrod;

namespace {

struct Point {
  double x;
  double y;
};

// Reference curves, point-mass probabilities vs λΔd.
const std::vector<Point> kZeroMass{{0.1, 0.950043106396634}, {0.5, 0.755782394184816}, {1.0, 0.544862512468571},
                                   {1.5, 0.384785418207774}, {2.0, 0.272111101803196}, {2.5, 0.194840534008335},
                                   {3.0, 0.141678581741492}, {3.3, 0.11785362110226}};
const std::vector<Point> kDeltaMass{{0.1, 0.00124714193392705}, {0.5, 0.0295561963815835},
                                    {1.0, 0.101673586085953},   {1.5, 0.185409263261827},
                                    {2.0, 0.260325336646403},   {2.7, 0.339572147456797}};

// Delay CDF at λ = 1 for Δd = 1, 2, 3, 4.
const std::vector<std::tuple<double, std::vector<Point>>> kCdf{
    {1.0, {{0.0, 0.544862512468571}, {0.3, 0.654930679882148}, {0.7, 0.837959828585836}, {1.0, 1.0}}},
    {2.0, {{0.0, 0.272111101803196}, {0.6, 0.450883343544667}, {1.0, 0.588171381217475}, {1.8, 0.908173991764305}}},
    {3.0, {{0.0, 0.141678581741492}, {1.2, 0.450331102420687}, {2.7, 0.890977563036718}, {3.0, 1.0}}},
    {4.0, {{0.0, 0.0780391288045684}, {0.8, 0.264324914513543}, {2.0, 0.510371487186262},
           {3.6, 0.878885977680569}}},
};

// Expected delay vs λ at Δd = 1.5.
const std::vector<Point> kExpected{{0.1, 0.0574373733355666}, {0.5, 0.288087748218657}, {1.0, 0.505603944731428},
                                   {1.7, 0.655129498817955},  {2.5, 0.715581519384431}, {4.0, 0.743483770850551}};

double integrate(auto f, double a, double b) { return gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13); }

}  // namespace

TEST(PointMasses, MatchReferenceCurves) {
  std::vector<double> grid;
  for (const auto& p : kZeroMass) grid.push_back(p.x);
  const auto rows = point_mass_curves(grid);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_NEAR(rows[i].zero, kZeroMass[i].y, 1e-10) << rows[i].load;
  for (const auto& p : kDeltaMass) {
    const auto s = solve_steady_state(1.0, p.x);
    EXPECT_NEAR(2 * s.mass_at_delta_d, p.y, 1e-10) << p.x;
  }
}

TEST(PointMasses, DependOnlyOnLoad) {
  for (double load : {0.3, 1.0, 4.0}) {
    const auto a = solve_steady_state(1.0, load);
    const auto b = solve_steady_state(4.0, load / 4.0);
    EXPECT_NEAR(a.mass_at_zero, b.mass_at_zero, 1e-14);
    EXPECT_NEAR(a.mass_at_delta_d, b.mass_at_delta_d, 1e-14);
  }
}

TEST(PointMasses, Limits) {
  const auto light = solve_steady_state(1.0, 1e-6);
  EXPECT_NEAR(2 * light.mass_at_zero, 1.0, 1e-6);
  EXPECT_NEAR(2 * light.mass_at_delta_d, 0.0, 1e-6);
  const auto heavy = solve_steady_state(1.0, 50.0);
  EXPECT_LT(2 * heavy.mass_at_zero, 1e-10);
  EXPECT_NEAR(2 * heavy.mass_at_delta_d, 0.5, 1e-10);
}

TEST(SteadyState, RejectsBadParameters) {
  EXPECT_THROW(solve_steady_state(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(solve_steady_state(1.0, -1.0), std::invalid_argument);
  EXPECT_THROW(solve_steady_state(std::numeric_limits<double>::infinity(), 1.0), std::invalid_argument);
  EXPECT_THROW(solve_steady_state(std::nan(""), 1.0), std::invalid_argument);
  EXPECT_THROW(solve_steady_state(10.0, 5.1), std::range_error);
  EXPECT_NO_THROW(solve_steady_state(10.0, 5.0));
  EXPECT_THROW(expected_delay(10.0, 6.0), std::range_error);
}

TEST(SteadyState, DensityIsExponential) {
  const auto s = solve_steady_state(0.8, 2.0);
  EXPECT_NEAR(s.finite_density(1.0) / s.finite_density(0.0), std::exp(0.4), 1e-13);
  EXPECT_EQ(s.finite_density(-0.1), 0.0);
  EXPECT_EQ(s.finite_density(2.1), 0.0);
}

TEST(SteadyState, FiniteMassMatchesQuadrature) {
  for (double lambda : {0.2, 1.0, 3.0}) {
    for (double dd : {0.5, 1.5, 4.0}) {
      const auto s = solve_steady_state(lambda, dd);
      const double q = integrate([&](double t) { return s.finite_density(t); }, 0.0, dd);
      EXPECT_NEAR(s.finite_mass(), q, 1e-12);
    }
  }
}

TEST(DelayCdf, MatchesReferenceCurves) {
  for (const auto& [dd, points] : kCdf) {
    const auto s = solve_steady_state(1.0, dd);
    for (const auto& p : points) EXPECT_NEAR(delay_cdf(s, p.x), p.y, 1e-10) << "dd " << dd << " t " << p.x;
  }
}

TEST(DelayCdf, MonotoneAndBounded) {
  const auto s = solve_steady_state(2.0, 1.5);
  double prev = 0.0;
  for (int i = 0; i <= 300; ++i) {
    const double v = delay_cdf(s, 1.5 * i / 300.0);
    ASSERT_GE(v, prev - 1e-15);
    ASSERT_LE(v, 1.0 + 1e-12);
    prev = v;
  }
  EXPECT_THROW(delay_cdf(s, -0.01), std::domain_error);
  EXPECT_THROW(delay_cdf(s, 1.51), std::domain_error);
}

TEST(ExpectedDelay, MatchesReferenceCurve) {
  for (const auto& p : kExpected) EXPECT_NEAR(expected_delay(p.x, 1.5), p.y, 1e-10) << p.x;
}

TEST(ExpectedDelay, MatchesStieltjesIntegral) {
  for (double lambda : {0.05, 0.7, 2.0}) {
    for (double dd : {0.3, 1.5, 5.0}) {
      if (lambda * dd > kMaxLoad) continue;
      const auto s = solve_steady_state(lambda, dd);
      // ∫ t dP_d = Δd − ∫₀^{Δd} P_d(t) dt
      const double q = dd - integrate([&](double t) { return delay_cdf(s, t); }, 0.0, dd);
      EXPECT_NEAR(expected_delay(lambda, dd), q, 1e-10) << lambda << " " << dd;
    }
  }
}

TEST(ExpectedDelay, StableAtTinyLoad) {
  for (double load : {1e-3, 1e-5, 1e-8}) {
    const double e = expected_delay(1.0, load);
    EXPECT_NEAR(e / low_flow_approx(1.0, load), 1.0, 2 * load) << load;
  }
}

TEST(ExpectedDelay, SaturatesBelowHalfGap) {
  EXPECT_LT(expected_delay(4.0, 1.5), 0.75);
  EXPECT_NEAR(expected_delay(1.0, 50.0), 25.0, 1e-6);
}

TEST(LowFlow, WithinFivePercentAtLightLoad) {
  for (int i = 1; i <= 20; ++i) {
    const double load = 0.2 * i / 20.0;
    const double e = expected_delay(1.0, load);
    EXPECT_LT(std::abs(low_flow_approx(1.0, load) - e) / e, 0.05) << load;
  }
}
