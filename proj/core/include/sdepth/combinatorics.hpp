#pragma once

#include <bit>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace sdepth {

/// Subset of [n] for n <= 64: element i lives in bit i-1.
using SubsetMask = std::uint64_t;

inline constexpr int kMaxMaskUniverse = 64;

constexpr SubsetMask element_bit(int element) noexcept {
  return SubsetMask{1} << (element - 1);
}

constexpr SubsetMask full_mask(int n) noexcept {
  return n >= 64 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

constexpr int cardinality(SubsetMask mask) noexcept { return std::popcount(mask); }

constexpr bool is_subset(SubsetMask a, SubsetMask b) noexcept { return (a & ~b) == 0; }

/// Exact C(n, k); throws Error(InvalidArgument) on 64-bit overflow. Zero when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// Largest r with r*r <= x.
std::uint64_t isqrt(std::uint64_t x) noexcept;

/// Floor division for signed integers (rounds toward negative infinity).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Position of `mask` among all subsets of the same cardinality in colex order.
/// Used as a dense index for left-endpoint tables.
std::uint64_t colex_rank(SubsetMask mask);

/// Number of subsets of [n] with cardinality in [lo, hi].
std::uint64_t count_subsets_in_range(int n, int lo, int hi);

namespace detail {

// Callbacks may return void (visit everything) or bool (false stops the walk).
template <typename Fn>
bool visit(Fn& fn, SubsetMask mask) {
  if constexpr (std::is_same_v<decltype(fn(mask)), bool>) {
    return fn(mask);
  } else {
    fn(mask);
    return true;
  }
}

}  // namespace detail

/// Visits every k-subset of [n] in lexicographic order of the sorted member list.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    detail::visit(fn, SubsetMask{0});
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  SubsetMask mask = 0;
  for (int e : idx) mask |= element_bit(e);
  while (true) {
    if (!detail::visit(fn, mask)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) return;
    mask &= ~element_bit(idx[i]);
    ++idx[i];
    mask |= element_bit(idx[i]);
    for (int j = i + 1; j < k; ++j) {
      mask &= ~element_bit(idx[j]);
      idx[j] = idx[j - 1] + 1;
      mask |= element_bit(idx[j]);
    }
  }
}

/// Visits every k-subset of the members of `set` (lexicographic in member order).
template <typename Fn>
void for_each_k_subset_of(SubsetMask set, int k, Fn&& fn) {
  std::vector<int> members;
  for (SubsetMask rest = set; rest != 0; rest &= rest - 1) {
    members.push_back(std::countr_zero(rest) + 1);
  }
  const int size = static_cast<int>(members.size());
  for_each_k_subset(size, k, [&](SubsetMask positions) {
    SubsetMask picked = 0;
    for (SubsetMask p = positions; p != 0; p &= p - 1) {
      picked |= element_bit(members[static_cast<std::size_t>(std::countr_zero(p))]);
    }
    return detail::visit(fn, picked);
  });
}

/// Visits every submask of `set`, including 0 and `set` itself.
template <typename Fn>
void for_each_submask(SubsetMask set, Fn&& fn) {
  SubsetMask sub = set;
  while (true) {
    if (!detail::visit(fn, sub)) return;
    if (sub == 0) return;
    sub = (sub - 1) & set;
  }
}

}  // namespace sdepth
