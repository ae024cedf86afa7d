#include "ixdelay/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ixdelay/error.hpp"
#include "json.hpp"

namespace ixdelay {
namespace {

using nlohmann::json;
using Code = SpecError::Code;

std::string num(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

template <class T>
T field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw SpecError(Code::malformed, std::string("spec is missing '") + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw SpecError(Code::malformed, std::string("spec field '") + key + "' has the wrong type: " + e.what());
  }
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_number(std::string_view text, std::size_t line) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("line " + std::to_string(line) + ": cannot parse '" + std::string(text) + "'");
  }
  return value;
}

json report_json(const ValidationReport& report) {
  json doc;
  doc["scenario"] = report.scenario;
  json params = json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  doc["parameters"] = params;
  json comps = json::array();
  for (const auto& c : report.comparisons) {
    comps.push_back({{"metric", c.metric},
                     {"value_a", c.value_a},
                     {"value_b", c.value_b},
                     {"tolerance", c.tolerance},
                     {"relation", std::string(to_string(c.relation))},
                     {"pass", c.pass}});
  }
  doc["comparisons"] = comps;
  doc["fallback_count"] = report.fallback_count;
  doc["flagged"] = report.flagged;
  doc["notes"] = report.notes;
  doc["passed"] = report.passed();
  return doc;
}

}  // namespace

Intersection parse_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(Code::malformed, std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError(Code::malformed, "spec must be a JSON object");

  IntersectionSpec spec;
  spec.lane_count = field<std::size_t>(doc, "lane_count");
  spec.delta_d = field<double>(doc, "delta_d");
  spec.delta_s = field<double>(doc, "delta_s");
  spec.lane_rates = field<std::vector<double>>(doc, "lane_rates");
  const auto pairs = field<std::vector<std::vector<long long>>>(doc, "conflicts");
  for (const auto& pair : pairs) {
    if (pair.size() != 2) throw SpecError(Code::malformed, "each conflict must be a pair of lane numbers");
    if (pair[0] < 1 || pair[1] < 1) {
      throw SpecError(Code::lane_out_of_range, "conflict lanes are numbered from 1");
    }
    spec.conflicts.emplace_back(static_cast<std::size_t>(pair[0]), static_cast<std::size_t>(pair[1]));
  }
  return validate_spec(spec);
}

Intersection load_spec(const std::filesystem::path& path) { return parse_spec(read_text(path)); }

std::string spec_to_json(const Intersection& spec) {
  json doc;
  doc["lane_count"] = spec.lane_count();
  json conflicts = json::array();
  for (const auto& [a, b] : spec.conflict_pairs()) conflicts.push_back({a, b});
  doc["conflicts"] = conflicts;
  doc["delta_d"] = spec.delta_d();
  doc["delta_s"] = spec.delta_s();
  doc["lane_rates"] = std::vector<double>(spec.rates().begin(), spec.rates().end());
  return doc.dump(2) + "\n";
}

std::vector<VehicleRecord> parse_vehicle_csv(std::string_view text) {
  std::vector<VehicleRecord> out;
  std::size_t line_no = 0;
  bool header = true;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line != "index,desired_time,lane") {
        throw std::invalid_argument("vehicle CSV must start with 'index,desired_time,lane'");
      }
      continue;
    }
    const auto cols = split(line, ',');
    if (cols.size() != 3) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 3 columns");
    const auto lane = parse_number<std::size_t>(cols[2], line_no);
    if (lane == 0) throw std::invalid_argument("line " + std::to_string(line_no) + ": lanes start at 1");
    out.push_back({parse_number<std::size_t>(cols[0], line_no), parse_number<double>(cols[1], line_no),
                   Lane::from_number(lane)});
  }
  return out;
}

std::vector<VehicleRecord> load_vehicle_csv(const std::filesystem::path& path) {
  return parse_vehicle_csv(read_text(path));
}

std::string vehicles_to_csv(std::span<const VehicleRecord> vehicles) {
  std::string out = "index,desired_time,lane\n";
  for (const auto& v : vehicles) {
    out += std::to_string(v.index) + "," + num(v.desired_time) + "," + std::to_string(v.lane.number()) + "\n";
  }
  return out;
}

std::string histogram_to_csv(const Histogram& h) {
  std::string out;
  if (h.dimensions() == 2) {
    out = "bin_x,bin_y,mass\n";
  } else {
    for (std::size_t d = 0; d < h.dimensions(); ++d) out += "bin_" + std::to_string(d + 1) + ",";
    out += "mass\n";
  }
  for (const auto& [key, mass] : h.cells()) {
    for (auto bin : key) out += num(h.lower_edge(bin)) + ",";
    out += num(mass) + "\n";
  }
  return out;
}

std::string histogram_to_json(const Histogram& h) {
  json doc;
  doc["dimensions"] = h.dimensions();
  doc["origin"] = h.origin();
  doc["bin_width"] = h.bin_width();
  doc["samples"] = h.sample_count();
  json cells = json::array();
  for (const auto& [key, mass] : h.cells()) {
    std::vector<double> lower;
    for (auto bin : key) lower.push_back(h.lower_edge(bin));
    cells.push_back({{"bins", key}, {"lower", lower}, {"mass", mass}});
  }
  doc["cells"] = cells;
  return doc.dump(2) + "\n";
}

std::string samples_to_csv(std::span<const DelaySample> samples) {
  std::string out = "iteration,particle,delay,region\n";
  for (const auto& s : samples) {
    out += std::to_string(s.iteration) + "," + std::to_string(s.particle) + "," + num(s.delay) + "," +
           std::to_string(static_cast<int>(s.region.id)) + "\n";
  }
  return out;
}

std::string report_to_json(const ValidationReport& report) { return report_json(report).dump(2) + "\n"; }

std::string report_to_text(const ValidationReport& report) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "scenario " << report.scenario << "\n";
  for (const auto& [k, v] : report.parameters) os << "  " << k << " = " << v << "\n";
  for (const auto& c : report.comparisons) {
    os << (c.pass ? "  PASS " : "  FAIL ") << c.metric << ": a=" << c.value_a << " b=" << c.value_b << " ("
       << to_string(c.relation) << ", tol " << c.tolerance << ")\n";
  }
  if (report.fallback_count > 0) os << "  fallback steps: " << report.fallback_count << "\n";
  for (const auto& n : report.notes) os << "  note: " << n << "\n";
  os << (report.passed() ? "PASSED" : (report.flagged ? "FLAGGED" : "FAILED")) << "\n";
  return os.str();
}

std::string manifest_to_json(const Manifest& m) {
  json doc;
  doc["command"] = m.command;
  doc["spec"] = json::parse(spec_to_json(m.spec));
  doc["policy"] = m.policy;
  doc["seed"] = m.seed;
  doc["particles"] = m.particles;
  doc["iterations"] = m.iterations;
  for (const auto& [k, v] : m.extra) doc[k] = v;
  return doc.dump(2) + "\n";
}

std::string table_to_csv(std::span<const std::string> header, const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + num(row[i]);
    out += "\n";
  }
  return out;
}

void write_text(const std::filesystem::path& path, std::string_view contents) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write to " + path.string() + " failed");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ixdelay
