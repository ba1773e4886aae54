#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vpf::cli {

/// Exit codes: 0 success, 1 I/O or parse error, 2 mathematical precondition failure.
enum Exit : int { Ok = 0, ParseFailure = 1, MathFailure = 2 };

/// Runs one command line (without the program name), writing results to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vpf::cli
