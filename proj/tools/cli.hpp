#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loops::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitTheoremFail = 3;

// Runs the `loops` command line with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loops::cli
