#pragma once

#include <cstddef>
#include <stdexcept>
#include <iosfwd>
#include <string>

#include "sdepth/partition_builder.hpp"

namespace sdepth {

/// Text format, ASCII with LF line endings:
///
///     n=5 d=2 regime=K1
///     1,2;1,2,5
///     ...
///
/// One "<lower>;<upper>" line per interval, members 1-indexed, comma-separated, sorted.
/// Layer provenance is not stored.
void write_partition(std::ostream& out, const IntervalPartition& p);
std::string emit_partition(const IntervalPartition& p);

/// Parse failure with the 1-based line number that caused it.
class PartitionParseError : public std::runtime_error {
public:
  PartitionParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Reads a partition file. Rejects malformed headers, members outside [n], lower not
/// inside upper, and a regime tag that disagrees with regime_of(n, d).
IntervalPartition read_partition(std::istream& in);
IntervalPartition parse_partition(const std::string& text);

/// Same n, d, regime and interval list (provenance ignored).
bool same_partition(const IntervalPartition& a, const IntervalPartition& b);

}  // namespace sdepth
