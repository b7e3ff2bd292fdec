#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetExhausted = 3;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
