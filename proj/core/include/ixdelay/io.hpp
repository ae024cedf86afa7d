#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ixdelay/ensemble.hpp"
#include "ixdelay/equilibrium.hpp"
#include "ixdelay/histogram.hpp"
#include "ixdelay/intersection.hpp"
#include "ixdelay/validation.hpp"

namespace ixdelay {

/// Parses a JSON intersection document:
///   {"lane_count": 2, "conflicts": [[1, 2]], "delta_d": 2.0,
///    "delta_s": 1.0, "lane_rates": [0.1, 0.5]}
/// Lanes in `conflicts` are numbered from 1. Throws SpecError (malformed)
/// on syntax or type errors and SpecError with the matching code when the
/// values violate an invariant.
Intersection parse_spec(std::string_view json_text);

/// Reads and parses a spec file. Throws IoError when it cannot be read.
Intersection load_spec(const std::filesystem::path& path);

std::string spec_to_json(const Intersection& spec);

/// CSV with header `index,desired_time,lane` (lanes numbered from 1).
std::vector<VehicleRecord> parse_vehicle_csv(std::string_view text);
std::vector<VehicleRecord> load_vehicle_csv(const std::filesystem::path& path);
std::string vehicles_to_csv(std::span<const VehicleRecord> vehicles);

/// Two-lane histograms as `bin_x,bin_y,mass` (lower bin edges); other lane
/// counts use one `bin_k` column per lane.
std::string histogram_to_csv(const Histogram& histogram);
std::string histogram_to_json(const Histogram& histogram);

/// `iteration,particle,delay,region`
std::string samples_to_csv(std::span<const DelaySample> samples);

std::string report_to_json(const ValidationReport& report);
std::string report_to_text(const ValidationReport& report);

/// Reproducibility manifest. `extra` is merged as string fields.
struct Manifest {
  std::string command;
  Intersection spec;
  std::string policy;
  std::uint64_t seed = 0;
  std::size_t particles = 0;
  std::size_t iterations = 0;
  std::vector<std::pair<std::string, std::string>> extra;
};

std::string manifest_to_json(const Manifest& manifest);

/// Simple CSV table writer: header row then rows of numbers printed with
/// 17 significant digits.
std::string table_to_csv(std::span<const std::string> header, const std::vector<std::vector<double>>& rows);

/// Writes `contents` to `path`, creating parent directories. Throws IoError.
void write_text(const std::filesystem::path& path, std::string_view contents);
std::string read_text(const std::filesystem::path& path);

}  // namespace ixdelay
