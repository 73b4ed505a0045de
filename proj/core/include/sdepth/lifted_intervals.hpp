#pragma once

#include <cstdint>
#include <vector>

#include "sdepth/block_structure.hpp"
#include "sdepth/circular_set.hpp"
#include "sdepth/density.hpp"
#include "sdepth/interval.hpp"

namespace sdepth {

/// Parameters for lifting (level_size)-subsets of [n] onto the circle [m], m = (n+1)s + n,
/// where blocks are taken at density s+1.
struct LiftParams {
  int n = 0;
  int level_size = 0;
  int s = 0;
  int m = 0;

  int density() const noexcept { return s + 1; }
  /// Upper endpoint size of every lifted interval, level_size + s.
  int upper_size() const noexcept { return level_size + s; }

  friend bool operator==(const LiftParams&, const LiftParams&) = default;
};

/// Largest admissible s for the given level, floor((n - level_size)/(level_size + 1)).
int max_lift_shift(int n, int level_size);

/// Builds LiftParams and asserts m > n, s+1 <= (m-1)/n, and
/// (m-n)/(s+1) <= n - level_size < m - n.
/// Throws Error(SOutOfRange) when s exceeds max_lift_shift, Error(InvalidArgument) on a bad level.
LiftParams validate_lift_params(int n, int level_size, int s);

/// A + {n+1, ..., 2n - level_size}, as a set over [m]. Throws Error(SizeMismatch).
CircularSet lift(const CircularSet& a, const LiftParams& params);

/// [A, f_{s+1}(lift(A)) cap [n]], with the cardinality identities asserted.
PosetInterval lifted_closure(SubsetMask a, const LiftParams& params);
PosetInterval lifted_closure(const CircularSet& a, const LiftParams& params);

/// One lifted interval per level_size-subset of [n].
///
/// `intervals` is in lexicographic order of the lower endpoint; `upper_of` answers
/// left-endpoint lookups in O(|lower|).
class IntervalFamily {
public:
  IntervalFamily(const LiftParams& params, std::vector<PosetInterval> intervals);

  const LiftParams& params() const noexcept { return params_; }
  int n() const noexcept { return params_.n; }
  int lower_size() const noexcept { return params_.level_size; }
  int upper_size() const noexcept { return params_.upper_size(); }
  int density() const noexcept { return params_.density(); }
  const std::vector<PosetInterval>& intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }

  /// Upper endpoint of the interval whose lower endpoint is `lower`, or 0 when absent.
  SubsetMask upper_of(SubsetMask lower) const;

  /// Restricts the family to the intervals whose index in intervals() is flagged.
  IntervalFamily filtered(const std::vector<bool>& keep) const;

private:
  LiftParams params_;
  std::vector<PosetInterval> intervals_;
  std::vector<SubsetMask> upper_by_rank_;  // colex rank of lower -> upper, 0 if absent
};

/// The family for level d+l at shift s (density s+1); throws as validate_lift_params.
IntervalFamily interval_family(int n, int d, int l, int s);
IntervalFamily interval_family(const LiftParams& params);

/// Some interval of the family contains D.
bool is_covered(SubsetMask d_set, const IntervalFamily& family);
bool is_covered(const CircularSet& d_set, const IntervalFamily& family);

/// For an uncovered D with at least lower_size() elements, no superset of D inside [n] is covered.
/// Throws Error(PreconditionViolated) when D is covered or smaller than the lower endpoints.
bool check_superset_closure(SubsetMask d_set, const IntervalFamily& family);
bool check_superset_closure(const CircularSet& d_set, const IntervalFamily& family);

/// [A, f_delta(A)] and [B, f_eta(B)] are disjoint whenever |f_eta(B)| - |B| <= eta - 1 and
/// A is not inside B. Returns whether that implication holds for this input.
/// Throws Error(PreconditionViolated) unless |A| <= |B|, delta >= eta >= 1, delta|A| <= n-1
/// and eta|B| <= n-1.
bool check_density_disjoint(const CircularSet& a, const CircularSet& b, const Density& delta, const Density& eta);

/// Integer-density comparison of lifted intervals of different levels: with |C| = d+q,
/// |D| = d+l, q <= l, eta <= delta, eta <= floor((n+1)/(d+l+1)), delta <= floor((n+1)/(d+q+1))
/// and (d+l+1)eta >= (d+q+1)delta, an uncovered D has an interval disjoint from C's.
/// Throws Error(PreconditionViolated) naming the failed hypothesis.
bool check_cross_level_disjoint(const CircularSet& c, const CircularSet& d_set, int d, int q, int l, int delta, int eta);

/// The block structure of D~ over [m'] with its padding block enlarged by {m'+1, ..., target_m}.
/// The padding block is the block containing position m'; every other segment keeps its
/// positions. Throws Error(PreconditionViolated) if m' lies in a gap or target_m < m'.
BlockStructure extended_block_structure(const CircularSet& lifted, int target_m, const Density& eta);

}  // namespace sdepth
