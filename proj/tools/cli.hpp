#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dha::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,      ///< argument parse failure or domain error
  kNumerical = 3,  ///< non-convergence or failed check
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dha::cli
