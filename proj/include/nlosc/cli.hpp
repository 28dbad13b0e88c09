#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlosc {

// Process exit codes shared by the CLI and the reproduce checks.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // reproduce found failing cells
inline constexpr int kExitUsage = 2;     // bad flags, parse errors, rejects
inline constexpr int kExitNumerical = 3; // solver / arithmetic failure

// Runs the command line (argv without the program name) against the given
// streams and returns the process exit code.  The binary in tools/ is a
// thin wrapper; tests drive this directly in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nlosc
