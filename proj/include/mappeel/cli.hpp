#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mappeel {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitIntegrity = 3 };

// Runs the tool on `args` (without the program name). Results go to `out` unless
// --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mappeel
