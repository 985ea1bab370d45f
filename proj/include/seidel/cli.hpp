#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seidel::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit status. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-point rendering with 12 decimals; tiny magnitudes print as zero.
std::string format_real(double value);

}  // namespace seidel::cli
