#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kary {

enum ExitCode : int { kExitOk = 0, kExitValidatorFailed = 1, kExitUsage = 2, kExitResource = 3 };

/// Parses `args` (without the program name) and runs the subcommand, writing the
/// report to `out` and diagnostics to `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kary
