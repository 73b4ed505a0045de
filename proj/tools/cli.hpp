#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sdepth::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kInternalVerification = 3,
  kInvalidCertificate = 4,
  kBoundsOnly = 10,
};

inline constexpr std::uint64_t kDefaultCap = 5'000'000;

/// Runs one command line (args[0] is the program name) against the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdepth::cli
