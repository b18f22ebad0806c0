#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrcft::cli {

// Exit codes: 0 success, 1 domain or verification failure, 2 usage, 3 retryable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRetry = 3;

// Runs the command line `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qrcft::cli
