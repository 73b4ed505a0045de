#include "sdepth/block_structure.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "sdepth/error.hpp"

namespace sdepth {

namespace {

// Scans the circle unrolled onto the integers: absolute position p is element (p-1) mod m + 1.
class UnrolledCircle {
public:
  UnrolledCircle(const CircularSet& a, const Density& delta) : a_(a), delta_(delta), m_(a.universe()) {}

  int element(std::int64_t p) const noexcept { return static_cast<int>((p - 1) % m_) + 1; }
  bool member(std::int64_t p) const noexcept { return a_.contains(element(p)); }

  // Last absolute position of the block opened at `start`: the block keeps growing while
  // the prefix satisfies |prefix| + 1 <= delta * |prefix cap A| and closes at the first
  // prefix that does not.
  std::int64_t block_end(std::int64_t start) const {
    std::int64_t length = 0;
    std::int64_t hits = 0;
    for (std::int64_t p = start;; ++p) {
      ++length;
      if (member(p)) ++hits;
      if (delta_.compare_scaled(length + 1, hits) > 0) return p;
      if (length > m_) fail(ErrorKind::Internal, "block scan did not terminate within one revolution");
    }
  }

  std::int64_t next_member_after(std::int64_t p) const {
    for (std::int64_t q = p + 1; q <= p + m_; ++q) {
      if (member(q)) return q;
    }
    fail(ErrorKind::Internal, "no member found within one revolution");
  }

private:
  const CircularSet& a_;
  const Density& delta_;
  std::int64_t m_;
};

std::string arc_label(const CircularBlock& block) {
  if (block.empty()) return "[]";
  return "[" + std::to_string(block.start) + ".." + std::to_string(block.end()) + "]";
}

}  // namespace

CircularSet BlockStructure::block_union() const {
  CircularSet out(universe);
  for (const auto& b : blocks) {
    for (int i = 0; i < b.length; ++i) out.insert(b.at(i));
  }
  return out;
}

CircularSet BlockStructure::gap_union() const {
  CircularSet out(universe);
  for (const auto& g : gaps) {
    for (int i = 0; i < g.length; ++i) out.insert(g.at(i));
  }
  return out;
}

std::string BlockStructure::render() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += "B" + arc_label(blocks[i]);
    if (i < gaps.size()) out += " G" + arc_label(gaps[i]);
  }
  return out;
}

BlockStructure block_structure(const CircularSet& a, const Density& delta) {
  if (a.empty()) fail(ErrorKind::EmptySet, "block structure of the empty set");
  const int m = a.universe();
  if (!delta.is_at_least_one() || delta.compare_scaled(m - 1, a.size()) < 0) {
    fail(ErrorKind::DensityOutOfRange, "density " + delta.to_string() + " outside [1, (n-1)/|A|] for n=" +
                                           std::to_string(m) + ", |A|=" + std::to_string(a.size()));
  }

  const UnrolledCircle circle(a, delta);

  // Starting from any member, the scan locks onto the true block starts once it passes the
  // end of the true block containing that member, which happens within one revolution.
  const std::int64_t origin = a.first();
  std::int64_t start = origin;
  while (start < origin + m) start = circle.next_member_after(circle.block_end(start));

  BlockStructure bs;
  bs.universe = m;
  bs.density = delta;
  const std::int64_t anchor = circle.element(start);
  std::int64_t cursor = anchor;
  while (cursor < anchor + m) {
    const std::int64_t end = circle.block_end(cursor);
    const std::int64_t next = circle.next_member_after(end);
    bs.blocks.push_back({m, circle.element(cursor), static_cast<int>(end - cursor + 1)});
    bs.gaps.push_back({m, circle.element(end + 1), static_cast<int>(next - end - 1)});
    cursor = next;
  }
  if (cursor != anchor + m) fail(ErrorKind::Internal, "block scan overran its starting block");

  const auto first = std::min_element(bs.blocks.begin(), bs.blocks.end(),
                                      [](const auto& x, const auto& y) { return x.start < y.start; });
  const auto shift = first - bs.blocks.begin();
  std::rotate(bs.blocks.begin(), first, bs.blocks.end());
  std::rotate(bs.gaps.begin(), bs.gaps.begin() + shift, bs.gaps.end());

  if (!validate_block_structure(a, bs).ok()) {
    fail(ErrorKind::Internal, "computed block structure fails validation: " + bs.render());
  }
  return bs;
}

CircularSet f_delta(const CircularSet& a, const Density& delta) {
  return a | block_structure(a, delta).gap_union();
}

ValidationReport validate_block_structure(const CircularSet& a, const BlockStructure& bs) {
  if (a.universe() != bs.universe) {
    fail(ErrorKind::UniverseMismatch, "set universe " + std::to_string(a.universe()) +
                                          " differs from structure universe " + std::to_string(bs.universe));
  }
  ValidationReport report;
  const int m = bs.universe;
  const Density& delta = bs.density;

  auto flag = [](ConditionCheck& check, std::string witness) {
    if (check.passed) {
      check.passed = false;
      check.witness = std::move(witness);
    }
  };

  // Alternation and tiling.
  if (bs.blocks.empty() || bs.blocks.size() != bs.gaps.size()) {
    flag(report.partition, "need p >= 1 blocks and exactly p gaps");
  } else {
    std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < bs.blocks.size(); ++i) {
      const auto& b = bs.blocks[i];
      const auto& g = bs.gaps[i];
      const auto& next = bs.blocks[(i + 1) % bs.blocks.size()];
      if (b.length < 1) flag(report.partition, "empty block B_" + std::to_string(i + 1));
      if (b.universe != m || g.universe != m) flag(report.partition, "segment universe mismatch");
      if (g.start != b.at(b.length)) flag(report.partition, "gap G_" + std::to_string(i + 1) + " does not follow B_" + std::to_string(i + 1));
      if (next.start != g.at(g.length)) flag(report.partition, "block after G_" + std::to_string(i + 1) + " is not adjacent");
      for (const auto* seg : {&b, &g}) {
        for (int j = 0; j < seg->length; ++j) {
          const int x = seg->at(j);
          if (x >= 1 && x <= m && seen[static_cast<std::size_t>(x)]++ > 0) {
            flag(report.partition, "position " + std::to_string(x) + " covered twice");
          }
        }
        total += seg->length;
      }
    }
    if (total != m) flag(report.partition, "segments cover " + std::to_string(total) + " of " + std::to_string(m) + " positions");
  }

  for (std::size_t i = 0; i < bs.blocks.size(); ++i) {
    const auto& b = bs.blocks[i];
    const std::string name = "B_" + std::to_string(i + 1) + arc_label(b);
    if (b.length < 1) continue;
    if (!a.contains(b.start)) flag(report.starts_in_set, name + " starts at " + std::to_string(b.start) + " not in A");

    std::int64_t hits = 0;
    for (int j = 0; j < b.length; ++j) {
      if (a.contains(b.at(j))) ++hits;
      const std::int64_t len = j + 1;
      if (len < b.length && delta.compare_scaled(len + 1, hits) > 0) {
        flag(report.prefix_density, name + " prefix [" + std::to_string(b.start) + ".." +
                                        std::to_string(b.at(j)) + "] too sparse");
      }
    }
    // delta*h - 1 < |B| <= delta*h
    if (!(delta.compare_scaled(b.length + 1, hits) > 0 && delta.compare_scaled(b.length, hits) <= 0)) {
      flag(report.block_sizes, name + " has size " + std::to_string(b.length) + " with " +
                                   std::to_string(hits) + " elements of A");
    }
  }
  for (std::size_t i = 0; i < bs.gaps.size(); ++i) {
    const auto& g = bs.gaps[i];
    for (int j = 0; j < g.length; ++j) {
      if (a.contains(g.at(j))) {
        flag(report.gaps_avoid_set, "G_" + std::to_string(i + 1) + arc_label(g) + " contains " + std::to_string(g.at(j)));
        break;
      }
    }
  }
  return report;
}

bool check_equal_size_disjoint(const CircularSet& a, const CircularSet& a_prime, const Density& delta) {
  if (a.size() != a_prime.size() || a == a_prime) {
    fail(ErrorKind::PreconditionViolated, "needs |A| = |A'| and A != A'");
  }
  const CircularSet fa = f_delta(a, delta);
  const CircularSet fa_prime = f_delta(a_prime, delta);
  // |f(A)| - |A| <= delta - 1
  const bool hypothesis = delta.compare_scaled(fa.size() - a.size() + 1, 1) <= 0;
  if (!hypothesis) return true;
  const CircularSet meet = a | a_prime;
  const bool intersect = meet.is_subset_of(fa) && meet.is_subset_of(fa_prime);
  return !intersect;
}

}  // namespace sdepth
