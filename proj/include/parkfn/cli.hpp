#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parkfn::cli {

enum class OutputFormat { plain, json, csv };

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // parking failed or a check failed
inline constexpr int kExitUsage = 2;     // bad arguments, parse error, guard hit

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parkfn::cli
