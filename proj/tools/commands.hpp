#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcayley::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kCap = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcayley::cli
