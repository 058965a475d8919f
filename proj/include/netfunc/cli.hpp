#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netfunc {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParseError = 2,
  kExitCapExceeded = 3,
  kExitUnknownFunctional = 4,
};

/// Entry point of the `netfunc` tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netfunc
