#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gag::cli {

enum ExitCode : int {
  kOk = 0,
  kFinding = 1,  // a property failed or a counterexample was found
  kUsage = 2,    // bad arguments, unreadable or malformed input
};

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gag::cli
