#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p5col {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,           // bad flags, unreadable output path, internal error
  kExitNotInClass = 2,      // input violates the declared class; witness printed
  kExitParse = 3,           // malformed graph, weights or coloring file
  kExitCutoff = 4,          // an exact routine refused an oversized instance
  kExitInvalidColoring = 5, // `oracle validate` rejected the coloring
};

/// Entry point of the `p5col` tool. Subcommands: solve, decompose,
/// generate, verify, oracle (see README). Cutoffs default to the library
/// Limits and may be overridden by P5COL_ORACLE_N, P5COL_WEIGHT_SUM and
/// P5COL_BERGE_N, or by the matching flags.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p5col
