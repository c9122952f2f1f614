#pragma once

#include "wn/arith.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wn {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_resource = 2, exit_verification = 3 };

/// Parses a height bound such as "1000", "1e6" or "1.6e5" and floors it; values below 1 give 0.
BigInt parse_height_bound(const std::string& text);

/// Runs one command line (without the program name); reports go to out, diagnostics to err.
int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wn
