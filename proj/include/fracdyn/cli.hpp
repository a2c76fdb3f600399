#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fracdyn {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotClosed = 1,
  kExitInputError = 2,
};

/// Runs the fracdyn command line (without the program name in `args`).
/// Subcommands: classify, potential, stationary, regions, integrate.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracdyn
