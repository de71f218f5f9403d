#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drc::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated signed integers; throws std::invalid_argument.
std::vector<long> parse_vector(const std::string& text);

}  // namespace drc::cli
