#pragma once

#include <string>
#include <vector>

namespace sboxkit {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitExhausted = 4;
inline constexpr int kExitStrict = 5;

/// Full command-line front end; args excludes the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace sboxkit
