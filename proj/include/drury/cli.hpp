#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace drury {

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInapplicable = 2,
  kExitViolation = 3,
};

/// Runs one CLI invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace drury
