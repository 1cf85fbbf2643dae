#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decomp {

// Exit codes of the decomp tool.
inline constexpr int kExitFound = 0;       // success / decomposition found
inline constexpr int kExitNone = 1;        // nothing found / exhaustion certificate / refusal
inline constexpr int kExitUsage = 2;       // usage or input error
inline constexpr int kExitBudget = 3;      // oracle refused the budget

/// Runs one invocation of the command-line tool. `args` excludes the
/// program name. Output is written once, after the computation finishes.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace decomp
