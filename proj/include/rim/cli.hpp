#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rim {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,      // malformed input or usage error
  kExitRefused = 2,    // infeasible or refused request (e.g. oracle cap)
  kExitInvariant = 3,  // internal invariant violation
};

/// Runs the tool on `args` (without the program name).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rim
