#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rainbow::cli {

enum exit_code : int { ok = 0, negative = 1, bad_input = 2, over_capacity = 3 };

/// Runs one command line (without the program name); returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rainbow::cli
