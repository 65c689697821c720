#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dhspan::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 bad input, 2 envelope exceeded, 3 invariant failure or a reported
/// counterexample.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dhspan::cli
