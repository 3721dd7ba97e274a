#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deds {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitSolved = 0,
  kExitInfeasible = 1,
  kExitInputError = 2,
  kExitResource = 3,
  kExitInternal = 4,  // a solver produced an arc set that failed verification
};

// Runs the command line tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deds
