#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gelint::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kConvergence = 3,
  kThresholdBreach = 4,
  kIo = 5,
};

// Runs the command line `args` (without the program name), writing results to
// `out` and diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gelint::cli
