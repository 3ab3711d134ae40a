#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abcov::cli {

// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kNotObstructed = 2;

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abcov::cli
