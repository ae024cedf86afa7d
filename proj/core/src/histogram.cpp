#include "ixdelay/histogram.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ixdelay {

Histogram::Histogram(std::size_t dimensions, double origin, double bin_width)
    : dimensions_(dimensions), origin_(origin), bin_width_(bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw std::invalid_argument("bin width must be positive, got " + std::to_string(bin_width));
  }
  if (dimensions == 0) throw std::invalid_argument("histogram needs at least one axis");
}

std::int64_t Histogram::bin_of(double value) const {
  // The nudge keeps atoms sitting exactly on an edge (0, Δd) in one bin
  // regardless of how the edge rounds.
  return static_cast<std::int64_t>(std::floor((value - origin_) / bin_width_ + 1e-9));
}

void Histogram::add(std::span<const double> point) {
  if (point.size() != dimensions_) throw std::invalid_argument("point dimension mismatch");
  Key key(dimensions_);
  for (std::size_t d = 0; d < dimensions_; ++d) key[d] = bin_of(point[d]);
  ++counts_[key];
  ++samples_;
}

std::map<Histogram::Key, double> Histogram::cells() const {
  std::map<Key, double> out;
  const double n = static_cast<double>(samples_);
  for (const auto& [key, count] : counts_) out.emplace(key, static_cast<double>(count) / n);
  return out;
}

double Histogram::mass(const Key& key) const {
  const auto it = counts_.find(key);
  return it == counts_.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(samples_);
}

double Histogram::total_mass() const {
  double total = 0.0;
  for (const auto& [key, m] : cells()) total += m;
  return total;
}

std::map<std::int64_t, double> Histogram::marginal(std::size_t axis) const {
  if (axis >= dimensions_) throw std::out_of_range("histogram axis out of range");
  std::map<std::int64_t, std::uint64_t> counts;
  for (const auto& [key, count] : counts_) counts[key[axis]] += count;
  std::map<std::int64_t, double> out;
  for (const auto& [bin, count] : counts) {
    out.emplace(bin, static_cast<double>(count) / static_cast<double>(samples_));
  }
  return out;
}

bool Histogram::same_binning(const Histogram& other) const noexcept {
  return dimensions_ == other.dimensions_ && origin_ == other.origin_ && bin_width_ == other.bin_width_;
}

Histogram histogram(const ParticleEnsemble& ensemble, double bin_width) {
  Histogram h(ensemble.lane_count(), -ensemble.spec().delta_d(), bin_width);
  for (std::size_t p = 0; p < ensemble.size(); ++p) h.add(ensemble.particle(p));
  return h;
}

namespace {

template <class Map>
double l1_of_maps(const Map& a, const Map& b) {
  double total = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      total += std::abs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      total += std::abs(ib->second);
      ++ib;
    } else {
      total += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return total;
}

}  // namespace

double l1_distance(const Histogram& a, const Histogram& b) {
  if (!a.same_binning(b)) throw std::invalid_argument("histograms use different binning");
  return l1_of_maps(a.cells(), b.cells());
}

double l1_distance(const std::map<std::int64_t, double>& a, const std::map<std::int64_t, double>& b) {
  return l1_of_maps(a, b);
}

}  // namespace ixdelay
