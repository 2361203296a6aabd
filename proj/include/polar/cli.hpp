#pragma once

#include <iosfwd>

namespace polar {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInput = 2, kExitBudget = 3 };

// Runs one `polar <subcommand> ...` invocation. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polar
