#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordlab {

/// Exit codes of run().
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitOracle = 4,
};

/// Command-line entry point; args excludes the program name. Data goes to
/// `out`, diagnostics (including the worker/budget header) to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordlab
