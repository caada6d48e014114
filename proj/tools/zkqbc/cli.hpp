#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zkqbc::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kInputError = 2,
  kPreconditionViolation = 3,
  kProofRejected = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zkqbc::cli
