#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kpath::cli {

enum ExitCode : int { kFound = 0, kNoSolution = 1, kUsageError = 2, kInternalFailure = 3 };

// Runs one command line (args excludes the program name). JSON or CSV goes
// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kpath::cli
