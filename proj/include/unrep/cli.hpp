#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unrep {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes: 0 pass, 1 analysis negative, 2 usage or parse error.
enum ExitCode { kExitPass = 0, kExitNegative = 1, kExitUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --out redirects them; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace unrep
