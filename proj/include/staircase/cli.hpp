#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace staircase {

// Runs the command-line interface on the given arguments (excluding the
// program name), writing results to out and diagnostics to err.  Returns the
// process exit code: 0 on success, 1 on a domain error (invalid input,
// guard exceeded, wrong regime), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace staircase
