#pragma once

// Command-line front end. Exit statuses: 0 success, 1 semantic failure
// (invalid or non-maximum matching, oracle disagreement, phase bound
// exceeded), 2 usage or input error.

#include <iosfwd>

namespace mvmatch {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. "-" as an input path reads `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mvmatch
