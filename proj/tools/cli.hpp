#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "minorforge/bounds.hpp"

namespace minorforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitUndecided = 3;
inline constexpr int kExitUsage = 64;    // EX_USAGE
inline constexpr int kExitNoInput = 66;  // EX_NOINPUT
inline constexpr int kExitSoftware = 70;

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 0 when everything was verified, 2 on any violation, 3 when only
/// undecided graphs remain.
int verify_exit_code(const CorpusSummary& s);

}  // namespace minorforge::cli
