#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewcfc {

enum ExitCode : int {
    kExitOk = 0,           ///< success, or Consistent
    kExitInconsistent = 1, ///< also a failed verify
    kExitUnknown = 2,
    kExitInputError = 3,
};

/// Runs the command line `args` (without the program name), writing the
/// result to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace skewcfc
