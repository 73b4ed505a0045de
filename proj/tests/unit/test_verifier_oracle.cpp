#include <doctest.h>

#include "sdepth/error.hpp"
#include "sdepth/formulas.hpp"
#include "sdepth/oracle.hpp"
#include "sdepth/partition_builder.hpp"
#include "sdepth/report.hpp"
#include "sdepth/verifier.hpp"

#include <algorithm>

using namespace sdepth;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an sdepth::Error");
  return ErrorKind::Internal;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("verify_partition on built partitions") {
  const auto p = build_partition(5, 2).partition;
  const auto v = verify_partition(p);
  CHECK(v.ok());
  CHECK(v.disjoint);
  CHECK(v.covers);
  CHECK(v.min_upper_size == 3);
  CHECK(v.interval_count == p.intervals.size());
  CHECK(sdepth_of_partition(p) == 3);
  CHECK(sdepth_of_partition(build_partition(4, 2).partition) == 2);
  CHECK(sdepth_of_partition(build_partition_k3(1).partition) == 4);
}

TEST_CASE("verifier mutations") {
  const auto base = build_partition(5, 2).partition;

  auto missing = base;
  const PosetInterval dropped = missing.intervals.back();
  missing.intervals.pop_back();
  missing.layer_of.pop_back();
  auto v = verify_partition(missing);
  CHECK_FALSE(v.covers);
  REQUIRE(v.uncovered.has_value());
  CHECK(*v.uncovered == dropped.lower);
  CHECK(kind_of([&] { (void)sdepth_of_partition(missing); }) == ErrorKind::InvalidPartition);
  CHECK(v.describe(missing).find("covers: no") != std::string::npos);

  auto duplicated = base;
  duplicated.intervals.push_back(duplicated.intervals.front());
  duplicated.layer_of.push_back(duplicated.layer_of.front());
  v = verify_partition(duplicated);
  CHECK_FALSE(v.disjoint);
  REQUIRE(v.overlap.has_value());
  CHECK(v.overlap->first == 0);
  CHECK(v.overlap->second == duplicated.intervals.size() - 1);

  auto grown = base;
  grown.intervals[0].upper |= parse_mask(5, "3");
  CHECK_FALSE(verify_partition(grown).disjoint);

  auto malformed = base;
  malformed.intervals[0].upper = parse_mask(5, "3,4");
  v = verify_partition(malformed);
  CHECK_FALSE(v.well_formed);
  CHECK(v.malformed == std::optional<std::size_t>{0});

  auto too_small = base;
  too_small.intervals.push_back({parse_mask(5, "1"), parse_mask(5, "1")});
  v = verify_partition(too_small);
  CHECK_FALSE(v.lowers_in_poset);

  auto outside = base;
  outside.intervals.push_back({parse_mask(6, "6"), parse_mask(6, "1,6")});
  CHECK(kind_of([&] { (void)verify_partition(outside); }) == ErrorKind::UniverseMismatch);
}

TEST_CASE("render_stanley_decomposition") {
  IntervalPartition single;
  single.n = 3;
  single.d = 3;
  single.regime = regime_of(3, 3);
  single.intervals = {{parse_mask(3, "1,2,3"), parse_mask(3, "1,2,3")}};
  CHECK(render_stanley_decomposition(single) == "x1*x2*x3 \xC2\xB7 K[x1,x2,x3]\n");

  const auto p = build_partition(5, 2).partition;
  const std::string text = render_stanley_decomposition(p);
  CHECK(count_lines(text) == p.intervals.size());
  CHECK(text.find("x1*x2 \xC2\xB7 K[x1,x2,x5]\n") != std::string::npos);

  auto broken = p;
  broken.intervals.pop_back();
  CHECK(kind_of([&] { (void)render_stanley_decomposition(broken); }) == ErrorKind::InvalidPartition);
  const auto lean = build_partition(5, 2, {.materialize_trivial = false}).partition;
  CHECK(kind_of([&] { (void)render_stanley_decomposition(lean); }) == ErrorKind::InvalidPartition);
}

TEST_CASE("oracle examples") {
  CHECK(exact_sdepth(3, 1) == 2);
  CHECK(exact_sdepth(5, 2) == 3);
  CHECK(exact_sdepth(4, 2) == 2);
  CHECK(exact_sdepth(1, 1) == 1);
  CHECK(partition_with_min_upper_exists(5, 2, 3));
  CHECK_FALSE(partition_with_min_upper_exists(5, 2, 4));
}

TEST_CASE("oracle matches the conjectured value for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= n; ++d) CHECK(exact_sdepth(n, d) == conjectured_sdepth(n, d));
  }
}

TEST_CASE("oracle budget") {
  const auto out = exact_sdepth_search(6, 1, 10);
  CHECK(out.budget_exhausted);
  CHECK_FALSE(out.value.has_value());
  CHECK(kind_of([] { (void)partition_with_min_upper_exists(6, 1, 4, 10); }) == ErrorKind::BudgetExhausted);
  const auto full = exact_sdepth_search(4, 1);
  CHECK_FALSE(full.budget_exhausted);
  CHECK(full.nodes > 0);
}

TEST_CASE("make_report") {
  const auto r52 = make_report(5, 2);
  CHECK(r52.conjectured == 3);
  CHECK(r52.certified_lower == 3);
  CHECK(r52.conjecture_certified());

  const auto r71 = make_report(7, 1);
  CHECK(r71.certified_lower == 4);
  CHECK(r71.certificate == "k3");
  CHECK(r71.conjecture_certified());

  const auto r291 = make_report(29, 1);
  CHECK(r291.certified_lower >= 6);
  CHECK(r291.upper_bound_formula == 15);
  CHECK_FALSE(r291.conjecture_certified());

  const auto with_oracle = make_report(5, 1, {.run_oracle = true});
  REQUIRE(with_oracle.oracle_exact.has_value());
  CHECK(*with_oracle.oracle_exact == 3);

  const std::string lines = machine_lines(r52);
  CHECK(lines.find("conjectured=3\n") != std::string::npos);
  CHECK(lines.find("certified_lower=3\n") != std::string::npos);
  CHECK(lines.find("conjecture_certified=yes\n") != std::string::npos);
}
