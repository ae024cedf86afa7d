#include "ixdelay/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ixdelay/error.hpp"

namespace ixdelay {

std::string_view to_string(Policy policy) noexcept {
  return policy == Policy::fifo ? "fifo" : "fo";
}

Policy parse_policy(std::string_view text) {
  if (text == "fifo" || text == "FIFO") return Policy::fifo;
  if (text == "fo" || text == "FO") return Policy::fo;
  throw std::invalid_argument("unknown policy '" + std::string(text) + "' (expected fifo or fo)");
}

Intersection validate_spec(const IntersectionSpec& spec) {
  using Code = SpecError::Code;
  if (spec.lane_count == 0) {
    throw SpecError(Code::no_lanes, "intersection needs at least one lane");
  }
  if (spec.lane_rates.size() != spec.lane_count) {
    throw SpecError(Code::rate_count_mismatch,
                    "lane_rates has " + std::to_string(spec.lane_rates.size()) +
                        " entries for " + std::to_string(spec.lane_count) + " lanes");
  }
  if (!(spec.delta_d >= 0.0) || !(spec.delta_s >= 0.0) || !std::isfinite(spec.delta_d) ||
      !std::isfinite(spec.delta_s)) {
    throw SpecError(Code::negative_gap, "delta_d and delta_s must be finite and >= 0");
  }
  for (std::size_t k = 0; k < spec.lane_rates.size(); ++k) {
    const double rate = spec.lane_rates[k];
    if (!(rate >= 0.0) || !std::isfinite(rate)) {
      throw SpecError(Code::negative_rate,
                      "lane " + std::to_string(k + 1) + " has invalid rate " + std::to_string(rate));
    }
  }
  const double total = std::accumulate(spec.lane_rates.begin(), spec.lane_rates.end(), 0.0);
  if (!(total > 0.0)) {
    throw SpecError(Code::zero_total_rate, "total arrival rate must be positive");
  }

  Intersection result;
  const std::size_t n = spec.lane_count;
  result.conflict_matrix_.assign(n * n, 0);
  for (const auto& [a, b] : spec.conflicts) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw SpecError(Code::lane_out_of_range, "conflict (" + std::to_string(a) + "," +
                                                   std::to_string(b) + ") names a missing lane");
    }
    if (a == b) {
      throw SpecError(Code::self_conflict,
                      "lane " + std::to_string(a) + " cannot conflict with itself");
    }
    result.conflict_matrix_[(a - 1) * n + (b - 1)] = 1;
    result.conflict_matrix_[(b - 1) * n + (a - 1)] = 1;
  }
  result.rates_ = spec.lane_rates;
  result.delta_d_ = spec.delta_d;
  result.delta_s_ = spec.delta_s;
  result.total_rate_ = total;
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> Intersection::conflict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t n = lane_count();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (conflict_matrix_[a * n + b] != 0) pairs.emplace_back(a + 1, b + 1);
    }
  }
  return pairs;
}

IntersectionSpec Intersection::to_spec() const {
  return IntersectionSpec{lane_count(), conflict_pairs(), delta_d_, delta_s_, rates_};
}

Intersection Intersection::with_rates(std::vector<double> rates) const {
  IntersectionSpec spec = to_spec();
  spec.lane_rates = std::move(rates);
  return validate_spec(spec);
}

Intersection Intersection::with_gaps(double delta_d, double delta_s) const {
  IntersectionSpec spec = to_spec();
  spec.delta_d = delta_d;
  spec.delta_s = delta_s;
  return validate_spec(spec);
}

Intersection two_lane_intersection(double rate1, double rate2, double delta_d, double delta_s) {
  return validate_spec(IntersectionSpec{2, {{1, 2}}, delta_d, delta_s, {rate1, rate2}});
}

double DelayVector::max() const {
  if (delays_.empty()) throw std::logic_error("empty delay vector");
  return *std::max_element(delays_.begin(), delays_.end());
}

double max_abs_difference(const DelayVector& a, const DelayVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("delay vectors differ in size");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a.at(k) - b.at(k)));
  }
  return worst;
}

}  // namespace ixdelay
