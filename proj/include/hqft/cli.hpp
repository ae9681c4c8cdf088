#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hqft {

enum ExitStatus : int { kExitOk = 0, kExitFailed = 1, kExitInput = 2, kExitRefused = 3 };

/// Runs the command line `args` (without the program name) and returns the
/// process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hqft
