#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "ixdelay/ensemble.hpp"

namespace ixdelay {

/// Sparse normalized histogram of ensemble states. Every axis starts at the
/// clamp floor -Δd and uses the same bin width; cell keys are per-lane bin
/// indices. For two lanes this is the (T¹, T²) histogram.
class Histogram {
 public:
  using Key = std::vector<std::int64_t>;

  Histogram(std::size_t dimensions, double origin, double bin_width);

  std::size_t dimensions() const noexcept { return dimensions_; }
  double origin() const noexcept { return origin_; }
  double bin_width() const noexcept { return bin_width_; }
  std::size_t sample_count() const noexcept { return samples_; }

  std::int64_t bin_of(double value) const;
  double lower_edge(std::int64_t bin) const { return origin_ + static_cast<double>(bin) * bin_width_; }

  void add(std::span<const double> point);

  /// Cell masses (counts / samples). Empty before the first `add`.
  std::map<Key, double> cells() const;
  double mass(const Key& key) const;
  double total_mass() const;

  /// Marginal of one axis: bin index -> mass.
  std::map<std::int64_t, double> marginal(std::size_t axis) const;

  bool same_binning(const Histogram& other) const noexcept;

 private:
  std::size_t dimensions_;
  double origin_;
  double bin_width_;
  std::size_t samples_ = 0;
  std::map<Key, std::uint64_t> counts_;
};

/// Histogram of an ensemble over [-Δd, max] per lane. Throws
/// std::invalid_argument for a non-positive bin width.
Histogram histogram(const ParticleEnsemble& ensemble, double bin_width);

/// Σ |a − b| over the union of cells; 2 for disjoint supports. Throws
/// std::invalid_argument when the binning differs.
double l1_distance(const Histogram& a, const Histogram& b);

/// Same for one-axis marginals.
double l1_distance(const std::map<std::int64_t, double>& a, const std::map<std::int64_t, double>& b);

}  // namespace ixdelay
