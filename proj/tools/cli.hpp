#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace magma::cli {

/// Process exit codes. Stable contract for scripts.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kGuardViolation = 3,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace magma::cli
