#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motbun::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kRealizationError = 3;
inline constexpr int kMismatch = 4;

// Runs one command (`realize`, `verify-bun`, `verify-count`, `census`); args
// exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motbun::cli
