#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pmp::cli {

/// Exit status of a command.
enum ExitCode : int { kSuccess = 0, kNumericFailure = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Usage errors (bad flags, malformed expressions,
/// points outside the domain) return 2; numerical failures and failed
/// verification properties return 1.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "re+imi" / "re-imi" with 15 significant digits; a zero imaginary part
/// always prints as "+0i".
std::string format_complex(double re, double im);

/// Outcome of one property checked by `verify`.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs a verification suite ("kernels", "operators", "pde" or "norms") with
/// the given seed. Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace pmp::cli
