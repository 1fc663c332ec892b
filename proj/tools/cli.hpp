#pragma once

#include <iosfwd>

namespace stanley::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitRegression = 3;
inline constexpr int kExitInvalidCertificate = 4;

/// Runs the `stanley` command line. Reports go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stanley::cli
