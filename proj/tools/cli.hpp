#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace golden::cli {

/// Exit statuses of the `golden` tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  /// Requested precision cannot be honoured, or a requested residual bound was not met.
  kPrecision = 4,
};

/// Parses `args` (without the program name), runs the command and writes its
/// output to `out`. Errors go to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace golden::cli
