#pragma once

#include <ostream>

namespace icsi {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // structure fails validation
inline constexpr int kExitParse = 2;    // unreadable input or bad usage
inline constexpr int kExitRefused = 3;  // oracle size bound exceeded

/// Entry point of the `icsi` tool, with the output streams injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace icsi
