#ifndef UPDOM_CLI_H_
#define UPDOM_CLI_H_

#include <iosfwd>

namespace updom {

// Process exit codes of the `updom` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // bad arguments, unreadable or malformed input
  kExitTimeLimit = 2,
  kExitInfeasible = 3,
  kExitMismatch = 4,  // verify found a disagreement
};

// Entry point behind the `updom` binary: generate | solve | verify | bench |
// export. Never throws; errors are reported on `err` and through the code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace updom

#endif  // UPDOM_CLI_H_
