#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ixdelay::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kValidationFailed = 3,
  kIoError = 4,
};

/// Environment variable naming the default output root.
inline constexpr const char* kOutRootVariable = "IXDELAY_OUT_ROOT";

/// Runs the command line `args` (program name first) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a,b,c" or "start:stop:step" (inclusive) into a list of values.
std::vector<double> parse_grid(const std::string& text);

}  // namespace ixdelay::cli
