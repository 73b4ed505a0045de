#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdepth/combinatorics.hpp"

namespace sdepth {

/// A subset of [universe] = {1, ..., universe}, read on the circle where universe is followed by 1.
///
/// The universe is part of the value: {1,2} over [5] and {1,2} over [11] compare unequal.
class CircularSet {
public:
  CircularSet() = default;
  explicit CircularSet(int universe);
  CircularSet(int universe, std::initializer_list<int> members);
  CircularSet(int universe, std::span<const int> members);

  /// Requires universe <= 64.
  static CircularSet from_mask(int universe, SubsetMask mask);
  /// Parses "1,3,7" (1-indexed, any order, no duplicates). Throws Error(Parse).
  static CircularSet parse(int universe, std::string_view text);

  int universe() const noexcept { return universe_; }
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool contains(int element) const noexcept;

  void insert(int element);
  void erase(int element);

  std::vector<int> members() const;
  /// Smallest member; requires a nonempty set.
  int first() const;
  /// Requires universe <= 64.
  SubsetMask to_mask() const;

  bool is_subset_of(const CircularSet& other) const;
  /// This set intersected with [new_universe], carried over to universe new_universe.
  CircularSet restricted_to(int new_universe) const;
  /// Same members placed in a larger universe.
  CircularSet embedded_in(int new_universe) const;
  /// Every member x moves to ((x - 1 + shift) mod universe) + 1.
  CircularSet rotated(int shift) const;

  /// Comma-separated sorted members, e.g. "1,3,7"; empty string for the empty set.
  std::string to_string() const;

  friend CircularSet operator|(const CircularSet& a, const CircularSet& b);
  friend CircularSet operator&(const CircularSet& a, const CircularSet& b);
  friend bool operator==(const CircularSet& a, const CircularSet& b) = default;

private:
  void check_element(int element) const;
  void check_same_universe(const CircularSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// An arc [start, end] of `length` consecutive positions clockwise from `start`.
struct CircularBlock {
  int universe = 0;
  int start = 1;
  int length = 0;

  /// Last position, wrapping modulo universe.
  int end() const noexcept { return (start - 1 + length - 1) % universe + 1; }
  /// Position `offset` steps clockwise from start (offset 0 is start).
  int at(int offset) const noexcept { return (start - 1 + offset) % universe + 1; }
  bool contains(int element) const noexcept;
  bool empty() const noexcept { return length == 0; }
  CircularSet elements() const;

  friend bool operator==(const CircularBlock&, const CircularBlock&) = default;
};

/// "1,3,7" rendering of a mask over [n]; empty string for 0.
std::string mask_to_string(SubsetMask mask);
/// Parses "1,3,7" into a mask over [universe]. Throws Error(Parse).
SubsetMask parse_mask(int universe, std::string_view text);

}  // namespace sdepth
