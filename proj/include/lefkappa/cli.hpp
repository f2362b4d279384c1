#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lefkappa {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsageOrParse = 1;
inline constexpr int kExitViolations = 2;

/// Entry point of the `lefkappa` tool. `args` excludes the program name.
/// Reports go to `out` (or --output), diagnostics and usage to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefkappa
