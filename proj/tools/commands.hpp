#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace necklace::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsageError = 2,
  kIntegrityError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` (or to --out PATH), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace necklace::cli
