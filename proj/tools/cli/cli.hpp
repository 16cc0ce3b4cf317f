#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heunlie::cli {

enum ExitCode : int {
  kOk = 0,
  kBadParams = 2,
  kOracleMismatch = 3,
  kStructural = 4,
  kIo = 5,
};

/// Runs one command line (without the program name). Reports go to `out`
/// (or the --out file), diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heunlie::cli
