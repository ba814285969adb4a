#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laterproof {

// Command-line front end, callable in-process for tests. args is argv
// without the program name. Exit codes, worst one wins across batch goals:
//   0  every goal provable
//   1  at least one goal not provable
//   2  formula or configuration error
//   3  prover/oracle disagreement, or a countermodel that failed its
//      own verification
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laterproof
