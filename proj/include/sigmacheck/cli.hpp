#pragma once

// Command-line front end. Subcommands: verify, ca, records, lemmas, stats,
// oracle. Exit codes: 0 everything held, 1 usage or input error, 2 some
// check was violated, 3 some check stayed undecided.

#include <ostream>
#include <string>
#include <vector>

namespace sigmacheck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolated = 2;
inline constexpr int kExitUndecided = 3;

/// Name of the environment variable holding the global precision cap (bits).
inline constexpr const char* kMaxBitsEnv = "SIGMACHECK_MAX_BITS";

/// `args` excludes the program name. Rows go to `out` as they are produced,
/// summaries and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigmacheck::cli
