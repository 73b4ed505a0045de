#pragma once

#include <string>

#include "sdepth/combinatorics.hpp"

namespace sdepth {

/// [lower, upper] = {C : lower <= C <= upper} inside the Boolean lattice on [n], n <= 64.
struct PosetInterval {
  SubsetMask lower = 0;
  SubsetMask upper = 0;

  bool well_formed() const noexcept { return is_subset(lower, upper); }
  bool contains(SubsetMask set) const noexcept { return is_subset(lower, set) && is_subset(set, upper); }
  bool is_trivial() const noexcept { return lower == upper; }
  int upper_size() const noexcept { return cardinality(upper); }
  /// Number of sets in the interval, 2^(|upper| - |lower|).
  std::uint64_t element_count() const noexcept { return std::uint64_t{1} << cardinality(upper & ~lower); }

  friend bool operator==(const PosetInterval&, const PosetInterval&) = default;
};

/// Two intervals meet iff lower | lower' fits under both uppers (that union is then
/// their smallest common element).
constexpr bool intervals_intersect(const PosetInterval& a, const PosetInterval& b) noexcept {
  const SubsetMask meet = a.lower | b.lower;
  return is_subset(meet, a.upper) && is_subset(meet, b.upper);
}

/// "lower;upper" with 1-indexed comma-separated members.
std::string to_string(const PosetInterval& interval);

}  // namespace sdepth
