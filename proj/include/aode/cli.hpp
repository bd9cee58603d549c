// Command line front end: subcommands solve, generic, prolong and algebraic.
#pragma once

#include <iosfwd>

namespace aode {

/// Exit codes: 0 success, 1 input error, 2 internal inconsistency.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aode
