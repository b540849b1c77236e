#pragma once

// Command-line front end.
//
//   straightedge verify FILE [--trace [PATH]] [--svg PATH] [--partition "s1=1,2,3,4,5;t1=3,4,5,6,7"]
//                            [--seed N] [--max-retries N]
//   straightedge oracle FILE
//   straightedge certificate FILE [--relations PATH] [--partition ...] [--seed N] [--max-retries N]
//
// FILE is a point document; `certificate` also accepts a trace document written by --trace.
// Exit codes: 0 ON_CUBIC, 1 NOT_ON_CUBIC, 2 DEGENERATE, 3 input error. For `certificate`,
// 0 means every relation holds and the product reduces to h(P2,V,U,P,Y); otherwise 1.

#include <ostream>
#include <string>
#include <vector>

#include "straightedge/constructions.hpp"

namespace straightedge {

enum ExitCode : int { kOnCubic = 0, kNotOnCubic = 1, kDegenerate = 2, kInputError = 3 };

int exit_code(VerdictKind kind);

/// Parses "s1=a,b,c,d,e;t1=f,g,h,i,j" with 1-based indices. Throws InputError.
PartitionScheme parse_partition(const std::string& text);

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace straightedge
