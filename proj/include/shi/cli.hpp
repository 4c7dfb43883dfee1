#pragma once

#include <ostream>

namespace shi {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs one command line: count, regions, bijection, invert, stats, verify or plot.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shi
