#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerloc {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerloc
