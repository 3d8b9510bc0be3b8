#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rigid::cli {

/// Exit codes besides 0 (success) and 1 (other failures).
inline constexpr int exit_usage = 2;  // unknown subcommand, bad flags, parse errors
inline constexpr int exit_cap = 3;    // a resource cap was exceeded

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigid::cli
