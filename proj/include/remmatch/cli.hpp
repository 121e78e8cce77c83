#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace remmatch {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitPrecondition = 2,
  kExitCandidate = 3,
  kExitBudget = 4,
};

/// Runs the command line front end. `args` excludes the program name. JSON
/// documents go to `out`, error documents to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace remmatch
