#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "sdepth/formulas.hpp"
#include "sdepth/partition_builder.hpp"

namespace sdepth {

/// Independent certificate check of an IntervalPartition. Only the interval list is
/// trusted; layer tags are ignored.
struct VerificationVerdict {
  bool well_formed = true;                  ///< lower <= upper on every interval
  std::optional<std::size_t> malformed;     ///< first interval with lower not inside upper
  bool lowers_in_poset = true;              ///< every lower endpoint has at least d elements
  std::optional<std::size_t> small_lower;   ///< first interval whose lower is too small
  bool disjoint = true;
  std::optional<std::pair<std::size_t, std::size_t>> overlap;  ///< first overlapping pair (i < j)
  bool covers = true;
  std::optional<SubsetMask> uncovered;      ///< first uncovered set, by size then lexicographically
  int min_upper_size = 0;                   ///< 0 only for an empty poset
  std::uint64_t interval_count = 0;         ///< explicit intervals

  bool ok() const noexcept { return well_formed && lowers_in_poset && disjoint && covers; }
  /// Multi-line human-readable summary including witnesses.
  std::string describe(const IntervalPartition& p) const;
};

/// Throws Error(UniverseMismatch) if an interval mentions an element outside [n].
VerificationVerdict verify_partition(const IntervalPartition& p);

/// Minimum upper size of a verified partition, a certified lower bound on sdepth(I_{n,d}).
/// Throws Error(InvalidPartition) when verification fails.
int sdepth_of_partition(const IntervalPartition& p);

/// One summand per interval and per line, "x1*x2 · K[x1,x2,x5]", in interval order.
/// Throws Error(InvalidPartition) when verification fails or the completion is implicit.
std::string render_stanley_decomposition(const IntervalPartition& p);

}  // namespace sdepth
