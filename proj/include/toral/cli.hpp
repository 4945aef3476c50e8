#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace toral {

// Exit codes of the toral-aut front-end.
enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitScopeError = 2 };

/// Runs `toral-aut <subcommand> ...`; argv[0] is the program name.
///
/// Subcommands: parse, hx, split, gaff, aut, lift, verify. Results go to
/// `out` (text or JSON per --format), diagnostics to `err`.
int run_cli(std::span<const std::string> argv, std::ostream &out, std::ostream &err);

} // namespace toral
