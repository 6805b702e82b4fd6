#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chs::cli {

enum ExitCode : int {
    ok = 0,
    invalid_input = 2,
    budget_exceeded = 3,
    mismatch = 4,
    usage = 64,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chs::cli
