#include "sdepth/formulas.hpp"

#include <cstdint>

#include "sdepth/combinatorics.hpp"
#include "sdepth/error.hpp"

namespace sdepth {

namespace {

void check_nd(int n, int d) {
  if (d < 1 || d > n) {
    fail(ErrorKind::InvalidArgument,
         "need 1 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
}

// isqrt(d^2 + 4(n+1)); both large-n quantities floor over this radical.
std::int64_t large_n_radical(int n, int d) {
  const auto disc = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d) +
                    4 * (static_cast<std::uint64_t>(n) + 1);
  return static_cast<std::int64_t>(isqrt(disc));
}

}  // namespace

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::TrivialRange: return "TrivialRange";
    case Regime::K1: return "K1";
    case Regime::K2: return "K2";
    case Regime::Mid: return "Mid";
    case Regime::Large: return "Large";
  }
  return "Unknown";
}

Regime parse_regime(std::string_view tag) {
  for (Regime r : {Regime::TrivialRange, Regime::K1, Regime::K2, Regime::Mid, Regime::Large}) {
    if (to_string(r) == tag) return r;
  }
  fail(ErrorKind::Parse, "unknown regime tag '" + std::string(tag) + "'");
}

int conjectured_sdepth(int n, int d) {
  check_nd(n, d);
  return (n - d) / (d + 1) + d;
}

int threshold_multiplier(int d) {
  require(d >= 1, ErrorKind::InvalidArgument, "threshold needs d >= 1");
  const std::int64_t target = 5 + 4 * static_cast<std::int64_t>(d);
  // Start from the isqrt estimate, then pin t by (2t-1)^2 <= x < (2t+1)^2.
  const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(target)));
  auto t = static_cast<int>((1 + root) / 2);
  while ((2LL * t - 1) * (2LL * t - 1) > target) --t;
  while ((2LL * t + 1) * (2LL * t + 1) <= target) ++t;
  return t;
}

int threshold(int d) {
  return (d + 1) * threshold_multiplier(d) + 2 * d;
}

int lower_bound_large_n(int n, int d) {
  check_nd(n, d);
  // sqrt(D) lies in [root, root+1), so floor((d + sqrt D)/2) = floor((d + root)/2).
  return static_cast<int>(floor_div(d + large_n_radical(n, d), 2));
}

int large_n_density_shift(int n, int d) {
  check_nd(n, d);
  if (n <= threshold(d)) {
    fail(ErrorKind::InvalidArgument, "density shift needs n > threshold(d) = " + std::to_string(threshold(d)));
  }
  const auto s = static_cast<int>(floor_div(large_n_radical(n, d) - d - 2, 2));
  const std::int64_t n1 = n + 1;
  if (s < 1 || static_cast<std::int64_t>(s + 1) * (d + s + 1) > n1) {
    fail(ErrorKind::Internal, "density shift postcondition (s+1)(d+s+1) <= n+1 failed");
  }
  for (int q = 1; q <= s; ++q) {
    if (s + 1 > n1 / (d + q + 1)) fail(ErrorKind::Internal, "density shift exceeds floor((n+1)/(d+q+1))");
  }
  return s;
}

RegimeDecomposition regime_of(int n, int d) {
  check_nd(n, d);
  RegimeDecomposition out{n, d, 0, n - d, Regime::TrivialRange};
  if (n <= 2 * d) return out;
  out.k = (n - d) / (d + 1);
  out.r = (n - d) % (d + 1);
  if (out.k == 1) {
    out.regime = Regime::K1;
  } else if (out.k == 2) {
    out.regime = Regime::K2;
  } else if (n <= threshold(d)) {
    out.regime = Regime::Mid;
  } else {
    out.regime = Regime::Large;
  }
  return out;
}

}  // namespace sdepth
