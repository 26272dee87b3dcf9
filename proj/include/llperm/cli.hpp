#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace llperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default largest length `gen` and `trace` accept without --force.
inline constexpr std::size_t kDefaultGuard = 11;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace llperm::cli
