#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moh {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitConstructionFailed = 3;
inline constexpr int kExitBudgetExceeded = 4;

/// Runs the command-line interface against the given argument list
/// (excluding the program name) and streams. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moh
