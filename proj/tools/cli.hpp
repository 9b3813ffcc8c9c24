#pragma once

#include <ostream>

namespace listaccess::cli {

// Exit statuses besides 0 (success) and CLI11's own usage-error codes.
inline constexpr int kRuntimeError = 1;
inline constexpr int kDominanceViolated = 3;

// Environment variable that overrides the oracle's request-count limit.
inline constexpr const char* kOracleLimitEnv = "LISTACCESS_ORACLE_MAX_N";

// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace listaccess::cli
