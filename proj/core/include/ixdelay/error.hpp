#pragma once

#include <stdexcept>
#include <string>

namespace ixdelay {

/// Raised when an intersection description violates one of its invariants.
class SpecError : public std::invalid_argument {
 public:
  enum class Code {
    no_lanes,
    rate_count_mismatch,
    self_conflict,
    lane_out_of_range,
    negative_rate,
    zero_total_rate,
    negative_gap,
    malformed,
  };

  SpecError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// A closed-form region lookup found no row or several rows for a state.
/// Only reachable if the caller hands in a state outside the reachable set.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ixdelay
