#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdraw::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconsistency = 2;

/// Runs one command line (without the program name). The JSON report goes to
/// `out`, human-readable summaries and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace sdraw::cli
