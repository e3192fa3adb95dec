#ifndef ORACLE_FORGE_CLI_DISPATCH_HPP
#define ORACLE_FORGE_CLI_DISPATCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oracle_forge::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct DispatchOptions {
  /// Also print a plain-text summary table to `err`.
  bool table = false;
};

/// Runs one command (args excludes the program name). The JSON report goes
/// to `out`; usage text and diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const DispatchOptions& options = {});

/// argv entry point: writes to stdout/stderr, table when stderr is a TTY.
int dispatch_main(int argc, char** argv);

}  // namespace oracle_forge::cli

#endif  // ORACLE_FORGE_CLI_DISPATCH_HPP
