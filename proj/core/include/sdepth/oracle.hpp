#pragma once

#include <cstdint>
#include <optional>

namespace sdepth {

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

struct OracleOutcome {
  std::optional<int> value;  ///< absent when the budget ran out before a definite answer
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;   ///< interval placements tried, summed over all targets
};

/// Exact sdepth(I_{n,d}) by exhaustive interval-partition search over the subsets of [n].
///
/// Targets t descend from n; for each t a backtracking exact cover places every set of
/// size in [d, t-1] into an interval whose upper endpoint has exactly t elements (any
/// partition with uppers >= t splits into one of that shape plus singletons). Shares no
/// code with the block-structure machinery. Intended for n <= 8.
OracleOutcome exact_sdepth_search(int n, int d, std::uint64_t budget = kDefaultOracleBudget);

/// exact_sdepth_search(...).value.
std::optional<int> exact_sdepth(int n, int d, std::uint64_t budget = kDefaultOracleBudget);

/// Whether an interval partition with every upper endpoint of size >= t exists.
/// Throws Error(BudgetExhausted) when the search runs out of nodes.
bool partition_with_min_upper_exists(int n, int d, int t, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace sdepth
