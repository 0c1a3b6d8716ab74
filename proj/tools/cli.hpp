#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewcorr::cli {

enum ExitCode : int {
  kOk = 0,
  kSuiteFailure = 1,
  kParseError = 2,
  kStateInvalid = 3,
  kUsage = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewcorr::cli
