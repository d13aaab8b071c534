#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace etaq::cli {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etaq::cli
