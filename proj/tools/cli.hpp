#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reflift::cli {

enum ExitCode : int {
  kLifts = 0,
  kParseError = 2,
  kDoesNotLift = 3,
  kGuardExceeded = 4,
  kInvariantViolation = 5,
};

/// args[0] is the program name.  Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflift::cli
