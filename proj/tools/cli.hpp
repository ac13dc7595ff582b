#pragma once

#include <ostream>

namespace reisner::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

// Parses argv, runs one subcommand and writes a single JSON document to out.
int run(int argc, const char* const* argv, std::ostream& out);

} // namespace reisner::cli
