#include "sdepth/combinatorics.hpp"

#include "sdepth/error.hpp"

#include <algorithm>
#include <array>

namespace sdepth {

namespace {

using PascalRow = std::array<std::uint64_t, kMaxMaskUniverse + 1>;

// C(i, j) for 0 <= i, j <= 64; every entry fits in 64 bits.
const std::array<PascalRow, kMaxMaskUniverse + 1>& pascal() {
  static const auto table = [] {
    std::array<PascalRow, kMaxMaskUniverse + 1> t{};
    for (int i = 0; i <= kMaxMaskUniverse; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) / i stays integral at every step.
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > UINT64_MAX) fail(ErrorKind::InvalidArgument, "binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t isqrt(std::uint64_t x) noexcept {
  if (x < 2) return x;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << 32;  // hi*hi > x for every 64-bit x
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (static_cast<unsigned __int128>(mid) * mid <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t colex_rank(SubsetMask mask) {
  const auto& table = pascal();
  std::uint64_t rank = 0;
  int i = 1;
  for (SubsetMask rest = mask; rest != 0; rest &= rest - 1, ++i) {
    const int position = std::countr_zero(rest);
    if (i <= position) rank += table[position][i];
  }
  return rank;
}

std::uint64_t count_subsets_in_range(int n, int lo, int hi) {
  std::uint64_t total = 0;
  for (int k = std::max(lo, 0); k <= std::min(hi, n); ++k) total += binomial(n, k);
  return total;
}

}  // namespace sdepth
