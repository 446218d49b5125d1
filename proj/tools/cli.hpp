#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leonard::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kPass = 0,
  kMathFailure = 1,
  kInputError = 2,
  kConstraintViolation = 3,
};

/// Runs one invocation; `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace leonard::cli
