#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrdecomp {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the tool on args (program name excluded), writing results to out
/// and diagnostics, traces and stats to err.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irrdecomp
