#pragma once

// Command-line front end.  cli_run is the whole program: it parses argv,
// dispatches to one subcommand, writes the result to stdout (or --out) and
// returns the process exit code.  Output is deterministic: identical
// arguments produce identical bytes.
//
// Exit codes: 0 success, 1 a check ran and failed, 2 configuration error
// (bad flags, unparsable rationals, out-of-domain requests).

#include <string>
#include <vector>

namespace rlx {

int cli_run(int argc, const char* const* argv);

// Convenience overload for tests: args without the program name.
int cli_run(const std::vector<std::string>& args);

}  // namespace rlx
