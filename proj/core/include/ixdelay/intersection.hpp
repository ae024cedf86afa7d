#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ixdelay {

/// Incoming lane. Numbered from 1 at every external surface (JSON, CSV, CLI);
/// `index()` is the zero-based position used for storage.
class Lane {
 public:
  constexpr Lane() = default;

  static constexpr Lane from_number(std::size_t number) { return Lane(number - 1); }
  static constexpr Lane from_index(std::size_t index) { return Lane(index); }

  constexpr std::size_t index() const noexcept { return index_; }
  constexpr std::size_t number() const noexcept { return index_ + 1; }

  friend constexpr bool operator==(Lane, Lane) = default;
  friend constexpr auto operator<=>(Lane, Lane) = default;

 private:
  constexpr explicit Lane(std::size_t index) : index_(index) {}
  std::size_t index_ = 0;
};

enum class Policy { fifo, fo };

std::string_view to_string(Policy policy) noexcept;
Policy parse_policy(std::string_view text);

/// Unvalidated intersection description, as read from a config file.
/// Conflict pairs use 1-based lane numbers.
struct IntersectionSpec {
  std::size_t lane_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> conflicts;
  double delta_d = 0.0;  ///< gap between vehicles of conflicting lanes [s]
  double delta_s = 0.0;  ///< gap between vehicles of the same lane [s]
  std::vector<double> lane_rates;  ///< Poisson rate per lane [1/s]
};

/// A validated intersection: conflict graph, temporal gaps and lane rates.
/// Immutable once built; obtain one through `validate_spec`.
class Intersection {
 public:
  std::size_t lane_count() const noexcept { return rates_.size(); }
  double delta_d() const noexcept { return delta_d_; }
  double delta_s() const noexcept { return delta_s_; }
  double total_rate() const noexcept { return total_rate_; }
  double rate(Lane lane) const { return rates_.at(lane.index()); }
  std::span<const double> rates() const noexcept { return rates_; }

  /// Probability that the next arrival belongs to `lane` (λ_k / λ).
  double lane_probability(Lane lane) const { return rate(lane) / total_rate_; }

  bool conflicts(Lane a, Lane b) const {
    return conflict_matrix_.at(a.index() * lane_count() + b.index()) != 0;
  }

  /// Conflict pairs (a < b) with 1-based lane numbers.
  std::vector<std::pair<std::size_t, std::size_t>> conflict_pairs() const;

  IntersectionSpec to_spec() const;

  /// Same intersection with lane rates replaced.
  Intersection with_rates(std::vector<double> rates) const;
  Intersection with_gaps(double delta_d, double delta_s) const;

  friend Intersection validate_spec(const IntersectionSpec& spec);

 private:
  Intersection() = default;

  std::vector<double> rates_;
  std::vector<unsigned char> conflict_matrix_;
  double delta_d_ = 0.0;
  double delta_s_ = 0.0;
  double total_rate_ = 0.0;
};

/// Checks every invariant of `spec` and returns the validated intersection.
/// Throws SpecError with a distinct code per violated invariant.
Intersection validate_spec(const IntersectionSpec& spec);

/// Two lanes that conflict with each other, rates `rate1`, `rate2`.
Intersection two_lane_intersection(double rate1, double rate2, double delta_d, double delta_s);

/// Per-lane delays T^k (seconds); component k is the latest passing time in
/// lane k minus the newest vehicle's desired time, clamped below at -Δd.
class DelayVector {
 public:
  DelayVector() = default;
  explicit DelayVector(std::vector<double> delays) : delays_(std::move(delays)) {}
  DelayVector(std::initializer_list<double> delays) : delays_(delays) {}

  std::size_t size() const noexcept { return delays_.size(); }
  double operator[](Lane lane) const { return delays_[lane.index()]; }
  double& operator[](Lane lane) { return delays_[lane.index()]; }
  double at(std::size_t index) const { return delays_.at(index); }

  std::span<const double> values() const noexcept { return delays_; }
  std::span<double> values() noexcept { return delays_; }

  double max() const;

  friend bool operator==(const DelayVector&, const DelayVector&) = default;

 private:
  std::vector<double> delays_;
};

/// Largest componentwise absolute difference.
double max_abs_difference(const DelayVector& a, const DelayVector& b);

}  // namespace ixdelay
