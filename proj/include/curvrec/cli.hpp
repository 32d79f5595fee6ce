#pragma once

#include <iosfwd>

namespace curvrec::cli {

/// Exit codes: 0 ok, 1 other failure (I/O, regularity), 2 usage or spec parse error,
/// 3 solver failure, 4 certified bound violated.
inline constexpr int kExitOk = 0;
inline constexpr int kExitOther = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitBound = 4;

/// Runs the `curvrec` command line. JSON results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvrec::cli
