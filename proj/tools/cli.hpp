#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relate::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kPositive = 0,
  kUsage = 1,
  kResource = 2,
  kNegative = 3,
  kMismatch = 4,
};

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relate::cli
