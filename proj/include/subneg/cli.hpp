// ============================================================================
// cli.hpp — command-line front end
// ============================================================================
//
// Subcommands: prove, check, interpolate, translate, simplify, countermodel.
// Exit codes: 0 provable/ok/found, 1 unprovable/invalid/none, 2 exhausted,
// 64 usage error, 65 parse error.  Diagnostics go to the error stream;
// --json switches every subcommand to single-line structured output.
// ============================================================================

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subneg {

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace subneg
