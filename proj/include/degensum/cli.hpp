#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degensum::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kDisagreement = 2,
  kUsage = 64,
  kData = 65,
};

/// Runs the `degensum` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degensum::cli
