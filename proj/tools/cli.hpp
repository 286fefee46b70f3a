#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sytstrip::cli {

/// Stable exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kBudgetExceeded = 3,
};

/// Environment variable holding the default cell budget for DP-backed commands.
inline constexpr const char* kCellBudgetEnv = "SYTSTRIP_CELL_BUDGET";

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sytstrip::cli
