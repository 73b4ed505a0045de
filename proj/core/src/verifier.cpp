#include "sdepth/verifier.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "sdepth/circular_set.hpp"
#include "sdepth/error.hpp"

namespace sdepth {

namespace {

constexpr int kBitmapLimit = 28;

// Set-membership over the subsets of [n]: a flat bitmap while it fits, a hash set beyond.
class SeenSets {
public:
  explicit SeenSets(int n) {
    if (n <= kBitmapLimit) bits_.assign((std::size_t{1} << n) / 64 + 1, 0);
  }

  // Returns false if the set was already present.
  bool insert(SubsetMask set) {
    if (!bits_.empty()) {
      auto& word = bits_[set / 64];
      const std::uint64_t bit = std::uint64_t{1} << (set % 64);
      const bool fresh = (word & bit) == 0;
      word |= bit;
      return fresh;
    }
    return hashed_.insert(set).second;
  }

  bool contains(SubsetMask set) const {
    if (!bits_.empty()) return (bits_[set / 64] >> (set % 64)) & 1U;
    return hashed_.count(set) != 0;
  }

private:
  std::vector<std::uint64_t> bits_;
  std::unordered_set<SubsetMask> hashed_;
};

}  // namespace

VerificationVerdict verify_partition(const IntervalPartition& p) {
  require(p.n >= 1 && p.n <= kMaxMaskUniverse, ErrorKind::InvalidArgument, "partition universe must be in [1, 64]");
  require(p.d >= 1 && p.d <= p.n, ErrorKind::InvalidArgument, "partition needs 1 <= d <= n");

  VerificationVerdict v;
  v.interval_count = p.intervals.size();
  const SubsetMask universe = full_mask(p.n);
  int min_upper = std::numeric_limits<int>::max();

  SeenSets seen(p.n);
  for (std::size_t j = 0; j < p.intervals.size(); ++j) {
    const PosetInterval& iv = p.intervals[j];
    if (((iv.lower | iv.upper) & ~universe) != 0) {
      fail(ErrorKind::UniverseMismatch, "interval " + std::to_string(j) + " leaves [" + std::to_string(p.n) + "]");
    }
    if (!iv.well_formed()) {
      if (v.well_formed) v.malformed = j;
      v.well_formed = false;
      continue;
    }
    if (cardinality(iv.lower) < p.d) {
      if (v.lowers_in_poset) v.small_lower = j;
      v.lowers_in_poset = false;
    }
    min_upper = std::min(min_upper, iv.upper_size());

    bool clash = false;
    for_each_submask(iv.upper & ~iv.lower, [&](SubsetMask extra) {
      if (!seen.insert(iv.lower | extra)) clash = true;
    });
    if (clash && v.disjoint) {
      v.disjoint = false;
      // Pairwise search only on the failure path, to name the earlier partner.
      for (std::size_t i = 0; i < j; ++i) {
        if (p.intervals[i].well_formed() && intervals_intersect(p.intervals[i], iv)) {
          v.overlap = std::make_pair(i, j);
          break;
        }
      }
    }
  }

  // Sets missing from every explicit interval: an error for a materialized partition,
  // singleton intervals when the completion is implicit.
  const int max_explicit_upper = p.intervals.empty()
                                     ? 0
                                     : std::max_element(p.intervals.begin(), p.intervals.end(),
                                                        [](const auto& a, const auto& b) {
                                                          return a.upper_size() < b.upper_size();
                                                        })->upper_size();
  for (int size = p.d; size <= p.n; ++size) {
    if (p.implicit_trivial && size > max_explicit_upper) {
      min_upper = std::min(min_upper, size);
      break;
    }
    bool found = false;
    for_each_k_subset(p.n, size, [&](SubsetMask set) {
      if (seen.contains(set)) return true;
      found = true;
      if (!p.implicit_trivial) {
        v.covers = false;
        v.uncovered = set;
      }
      return false;
    });
    if (found) {
      if (p.implicit_trivial) min_upper = std::min(min_upper, size);
      break;
    }
  }
  v.min_upper_size = min_upper == std::numeric_limits<int>::max() ? 0 : min_upper;
  return v;
}

std::string VerificationVerdict::describe(const IntervalPartition& p) const {
  std::ostringstream out;
  out << "intervals: " << interval_count << (p.implicit_trivial ? " (plus implicit singletons)" : "") << '\n';
  out << "well_formed: " << (well_formed ? "yes" : "no");
  if (malformed) out << " (line " << *malformed + 1 << ": " << to_string(p.intervals[*malformed]) << ")";
  out << '\n' << "lowers_in_poset: " << (lowers_in_poset ? "yes" : "no");
  if (small_lower) out << " (line " << *small_lower + 1 << ": " << to_string(p.intervals[*small_lower]) << ")";
  out << '\n' << "disjoint: " << (disjoint ? "yes" : "no");
  if (overlap) {
    out << " (lines " << overlap->first + 1 << " and " << overlap->second + 1 << ": "
        << to_string(p.intervals[overlap->first]) << " meets " << to_string(p.intervals[overlap->second]) << ")";
  }
  out << '\n' << "covers: " << (covers ? "yes" : "no");
  if (uncovered) out << " (missing {" << mask_to_string(*uncovered) << "})";
  out << '\n' << "min_upper_size: " << min_upper_size << '\n';
  return out.str();
}

int sdepth_of_partition(const IntervalPartition& p) {
  const VerificationVerdict v = verify_partition(p);
  if (!v.ok()) fail(ErrorKind::InvalidPartition, "partition failed verification:\n" + v.describe(p));
  return v.min_upper_size;
}

namespace {

std::string monomial(SubsetMask support) {
  std::string out;
  for (SubsetMask rest = support; rest != 0; rest &= rest - 1) {
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string variables(SubsetMask support) {
  std::string out;
  for (SubsetMask rest = support; rest != 0; rest &= rest - 1) {
    if (!out.empty()) out += ',';
    out += "x" + std::to_string(std::countr_zero(rest) + 1);
  }
  return out;
}

}  // namespace

std::string render_stanley_decomposition(const IntervalPartition& p) {
  if (p.implicit_trivial) fail(ErrorKind::InvalidPartition, "rendering needs a materialized partition");
  const VerificationVerdict v = verify_partition(p);
  if (!v.ok()) fail(ErrorKind::InvalidPartition, "partition failed verification:\n" + v.describe(p));
  std::string out;
  for (const auto& iv : p.intervals) {
    out += monomial(iv.lower) + " · K[" + variables(iv.upper) + "]\n";
  }
  return out;
}

}  // namespace sdepth
