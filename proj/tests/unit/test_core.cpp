#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>

#include "sdepth/circular_set.hpp"
#include "sdepth/combinatorics.hpp"
#include "sdepth/density.hpp"
#include "sdepth/error.hpp"
#include "sdepth/formulas.hpp"

using namespace sdepth;
using boost::multiprecision::cpp_int;

namespace {

cpp_int big_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an sdepth::Error");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("binomial matches big-integer arithmetic") {
  for (int n = 0; n <= 60; ++n) {
    for (int k = -1; k <= n + 1; ++k) {
      CHECK(cpp_int(binomial(n, k)) == big_binomial(n, k));
    }
  }
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK(kind_of([] { (void)binomial(70, 35); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("isqrt and floor_div") {
  for (std::uint64_t x = 0; x < 5000; ++x) {
    const std::uint64_t r = isqrt(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
  }
  CHECK(isqrt(~std::uint64_t{0}) == 4294967295ULL);
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-6, 2) == -3);
  CHECK(floor_div(7, -2) == -4);
}

TEST_CASE("subset enumeration") {
  std::vector<SubsetMask> seen;
  for_each_k_subset(5, 2, [&](SubsetMask m) { seen.push_back(m); });
  REQUIRE(seen.size() == 10);
  CHECK(seen.front() == 0b00011);
  CHECK(seen[1] == 0b00101);
  CHECK(seen.back() == 0b11000);
  std::vector<std::vector<int>> as_lists;
  for (SubsetMask m : seen) as_lists.push_back(CircularSet::from_mask(5, m).members());
  CHECK(std::is_sorted(as_lists.begin(), as_lists.end()));

  int count = 0;
  for_each_k_subset(10, 3, [&](SubsetMask) { return ++count < 7; });
  CHECK(count == 7);

  std::set<SubsetMask> subs;
  for_each_k_subset_of(0b101101, 2, [&](SubsetMask m) {
    CHECK(is_subset(m, 0b101101));
    CHECK(cardinality(m) == 2);
    subs.insert(m);
  });
  CHECK(subs.size() == 6);

  int submasks = 0;
  for_each_submask(0b1011, [&](SubsetMask) { ++submasks; });
  CHECK(submasks == 8);

  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<bool> hit(binomial(n, k), false);
      for_each_k_subset(n, k, [&](SubsetMask m) {
        const auto r = colex_rank(m);
        REQUIRE(r < hit.size());
        CHECK_FALSE(hit[r]);
        hit[r] = true;
      });
    }
  }
  CHECK(count_subsets_in_range(5, 2, 5) == 26);
  CHECK(count_subsets_in_range(5, 0, 5) == 32);
}

TEST_CASE("CircularSet basics") {
  const CircularSet a(7, {3, 1, 7});
  CHECK(a.size() == 3);
  CHECK(a.to_string() == "1,3,7");
  CHECK(a.first() == 1);
  CHECK(a.contains(7));
  CHECK_FALSE(a.contains(2));
  CHECK(CircularSet::parse(7, "7,1,3") == a);
  CHECK(a.rotated(1) == CircularSet(7, {1, 2, 4}));
  CHECK(a.rotated(-1) == CircularSet(7, {2, 6, 7}));
  CHECK(a.rotated(7) == a);
  CHECK(a.embedded_in(11).universe() == 11);
  CHECK(a.embedded_in(11).to_string() == "1,3,7");
  CHECK(a.embedded_in(11).restricted_to(5) == CircularSet(5, {1, 3}));
  CHECK(a != CircularSet(8, {1, 3, 7}));
  CHECK(CircularSet::from_mask(7, a.to_mask()) == a);

  const CircularSet big(130, {1, 64, 65, 130});
  CHECK(big.members() == std::vector<int>{1, 64, 65, 130});
  CHECK(big.rotated(1).members() == std::vector<int>{1, 2, 65, 66});

  CHECK(kind_of([] { (void)CircularSet::parse(5, "1,1"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)CircularSet::parse(5, ""); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)CircularSet::parse(5, "6"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)CircularSet::parse(5, "1,x"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)(CircularSet(5, {1}) | CircularSet(6, {1})); }) == ErrorKind::UniverseMismatch);

  CHECK(mask_to_string(0b10011) == "1,2,5");
  CHECK(parse_mask(5, "5,1,2") == 0b10011);
}

TEST_CASE("CircularBlock wraps around") {
  const CircularBlock b{7, 6, 4};
  CHECK(b.end() == 2);
  CHECK(b.contains(7));
  CHECK(b.contains(1));
  CHECK_FALSE(b.contains(3));
  CHECK(b.elements() == CircularSet(7, {6, 7, 1, 2}));
}

TEST_CASE("Density") {
  CHECK(Density::parse("6/4") == Density(3, 2));
  CHECK(Density::parse("2").to_string() == "2");
  CHECK(Density(3, 2).to_string() == "3/2");
  CHECK(Density(3, 2) < Density(2));
  CHECK(Density(3, 2).compare_scaled(3, 2) == 0);
  CHECK(Density(3, 2).compare_scaled(4, 2) > 0);
  CHECK(Density(3, 2).compare_scaled(2, 2) < 0);
  CHECK_FALSE(Density(1, 2).is_at_least_one());
  CHECK(kind_of([] { (void)Density(0); }) == ErrorKind::DensityOutOfRange);
  CHECK(kind_of([] { (void)Density::parse("1/0"); }) != ErrorKind::Internal);
}

TEST_CASE("conjectured_sdepth examples") {
  CHECK(conjectured_sdepth(5, 1) == 3);
  CHECK(conjectured_sdepth(13, 2) == 5);
  for (int n = 1; n <= 20; ++n) CHECK(conjectured_sdepth(n, n) == n);
  CHECK(kind_of([] { (void)conjectured_sdepth(3, 4); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)conjectured_sdepth(3, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("conjectured_sdepth equals floor of the binomial ratio plus d") {
  for (int n = 1; n <= 40; ++n) {
    for (int d = 1; d <= n; ++d) {
      const cpp_int expected = big_binomial(n, d + 1) / big_binomial(n, d) + d;
      CHECK(cpp_int(conjectured_sdepth(n, d)) == expected);
    }
  }
}

TEST_CASE("threshold examples and brute-force bracket") {
  CHECK(threshold(1) == 6);
  CHECK(threshold(2) == 10);
  CHECK(threshold(5) == 28);
  CHECK(kind_of([] { (void)threshold(0); }) == ErrorKind::InvalidArgument);
  for (int d = 1; d <= 60; ++d) {
    int t = 0;
    for (int c = 0; c < 100; ++c) {
      if ((2 * c - 1) * (2 * c - 1) <= 5 + 4 * d && 5 + 4 * d < (2 * c + 1) * (2 * c + 1)) t = c;
    }
    CHECK(threshold_multiplier(d) == t);
    CHECK(threshold(d) == (d + 1) * t + 2 * d);
  }
}

TEST_CASE("large-n bounds") {
  CHECK(lower_bound_large_n(7, 1) == 3);
  CHECK(lower_bound_large_n(11, 2) == 4);
  CHECK(lower_bound_large_n(12, 1) == 4);
  CHECK(large_n_density_shift(7, 1) == 1);
  CHECK(large_n_density_shift(12, 1) == 2);
  // (29,5): floor((-7 + sqrt(145))/2) = floor(2.52) = 2, and 3*8 = 24 <= 30.
  CHECK(large_n_density_shift(29, 5) == 2);
  CHECK(kind_of([] { (void)large_n_density_shift(6, 1); }) == ErrorKind::InvalidArgument);

  for (int d = 1; d <= 20; ++d) {
    for (int n = threshold(d) + 1; n <= threshold(d) + 200; ++n) {
      const int s = large_n_density_shift(n, d);
      CHECK(lower_bound_large_n(n, d) == d + 1 + s);
      CHECK((s + 1) * (d + s + 1) <= n + 1);
      CHECK((s + 2) * (d + s + 2) > n + 1);
      // floor((d + sqrt(d^2+4(n+1)))/2) by direct search on the integer t: t <= that value iff (2t-d)^2 <= D.
      const long long disc = 1LL * d * d + 4LL * (n + 1);
      int t = 0;
      while (1LL * (2 * (t + 1) - d) * (2 * (t + 1) - d) <= disc || 2 * (t + 1) - d < 0) ++t;
      CHECK(lower_bound_large_n(n, d) == t);
    }
  }
}

TEST_CASE("regime_of") {
  const auto r52 = regime_of(5, 2);
  CHECK(r52.regime == Regime::K1);
  CHECK(r52.k == 1);
  CHECK(r52.r == 0);
  CHECK(regime_of(4, 2).regime == Regime::TrivialRange);
  const auto r235 = regime_of(23, 5);
  CHECK(r235.regime == Regime::Mid);
  CHECK(r235.k == 3);
  CHECK(r235.r == 0);
  CHECK(regime_of(9, 2).regime == Regime::K2);
  CHECK(regime_of(7, 1).regime == Regime::Large);

  for (int d = 1; d <= 30; ++d) {
    for (int n = d; n <= 150; ++n) {
      const auto rd = regime_of(n, d);
      CHECK(rd.n == n);
      CHECK(rd.d == d);
      if (n <= 2 * d) {
        CHECK(rd.regime == Regime::TrivialRange);
        continue;
      }
      CHECK(n == (d + 1) * rd.k + d + rd.r);
      CHECK(rd.r >= 0);
      CHECK(rd.r <= d);
      CHECK((rd.regime == Regime::Large) == (n > threshold(d)));
    }
  }
  for (Regime r : {Regime::TrivialRange, Regime::K1, Regime::K2, Regime::Mid, Regime::Large}) {
    CHECK(parse_regime(to_string(r)) == r);
  }
  CHECK(kind_of([] { (void)parse_regime("Huge"); }) == ErrorKind::Parse);
}
