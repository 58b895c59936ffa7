#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace addtrip::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kBudgetExceeded = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addtrip::cli
