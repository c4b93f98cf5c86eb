#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dyc::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;  // non-member, NOT_IN_REGION, failed verification or scan
inline constexpr int kUsage = 2;     // parse errors, invalid gains, out-of-limit scans

/// Runs the command line `args` (without the program name). JSON payloads go
/// to `out` (or to --output FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyc::cli
