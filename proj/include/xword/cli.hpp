#pragma once

#include <ostream>

namespace xword {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitNosat = 2 };

/// Entry point of the `xword` tool: subcommands solve, eval-qa, eval-puzzle,
/// gen and split. Writes results to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xword
