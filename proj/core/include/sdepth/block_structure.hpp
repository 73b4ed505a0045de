#pragma once

#include <string>
#include <vector>

#include "sdepth/circular_set.hpp"
#include "sdepth/density.hpp"

namespace sdepth {

/// Alternating blocks and gaps B_1, G_1, ..., B_p, G_p around the circle [universe].
///
/// gaps[i] is the (possibly empty) arc between blocks[i] and blocks[i+1]. Blocks are
/// listed from the one with the smallest start position.
struct BlockStructure {
  int universe = 0;
  Density density;
  std::vector<CircularBlock> blocks;
  std::vector<CircularBlock> gaps;

  CircularSet block_union() const;
  CircularSet gap_union() const;
  /// "B[1..4] G[5..5]", clockwise from the first block; an empty gap prints as "G[]".
  std::string render() const;

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

/// Outcome of one defining condition; `witness` names the first offending block or prefix.
struct ConditionCheck {
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  ConditionCheck partition;       ///< segments alternate and tile [universe] exactly once
  ConditionCheck starts_in_set;   ///< (i) each block starts with an element of A
  ConditionCheck gaps_avoid_set;  ///< (ii) no gap meets A
  ConditionCheck block_sizes;     ///< (iii) delta|A cap B| - 1 < |B| <= delta|A cap B|
  ConditionCheck prefix_density;  ///< (iv) |[b,y]| + 1 <= delta|[b,y] cap A| on proper prefixes

  bool ok() const noexcept {
    return partition.passed && starts_in_set.passed && gaps_avoid_set.passed && block_sizes.passed &&
           prefix_density.passed;
  }
};

/// The unique block structure of A with respect to delta on [A.universe()].
///
/// Throws Error(EmptySet) for an empty A and Error(DensityOutOfRange) unless
/// 1 <= delta <= (n-1)/|A|.
BlockStructure block_structure(const CircularSet& a, const Density& delta);

/// A together with every gap element of its block structure.
CircularSet f_delta(const CircularSet& a, const Density& delta);

/// Re-checks the four defining conditions of `bs` against A. Throws Error(UniverseMismatch).
ValidationReport validate_block_structure(const CircularSet& a, const BlockStructure& bs);

/// Disjointness of [A, f(A)] and [A', f(A')] for equal-size A != A' whenever
/// |f(A)| - |A| <= delta - 1. Returns true when the implication holds (vacuously if the
/// hypothesis fails). Throws Error(PreconditionViolated) when |A| != |A'| or A == A'.
bool check_equal_size_disjoint(const CircularSet& a, const CircularSet& a_prime, const Density& delta);

}  // namespace sdepth
