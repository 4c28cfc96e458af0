#pragma once

#include <iosfwd>

namespace omega {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Parses argv, runs the subcommand and returns the process exit status.
/// Data goes to `out` unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omega
