#include "sdepth/oracle.hpp"

#include <vector>

#include "sdepth/combinatorics.hpp"
#include "sdepth/error.hpp"

namespace sdepth {

namespace {

constexpr int kOracleMaxN = 12;

struct BudgetOut {};

// Exact cover of the sets with sizes in [d, t-1] by intervals [D, B] with |B| = t.
// `nodes` accumulates across searches and is checked against `budget`.
//
// Sets are taken in (size, lex) order; when D is the first unassigned set every proper
// subset of D in the poset is already placed, so D must be the lower endpoint of its interval.
class CoverSearch {
public:
  CoverSearch(int n, int d, int t, std::uint64_t budget, std::uint64_t& nodes)
      : budget_(budget), nodes_(nodes), assigned_(std::size_t{1} << n, 0) {
    for (int size = d; size < t; ++size) {
      for_each_k_subset(n, size, [&](SubsetMask set) { order_.push_back(set); });
    }
    uppers_.resize(std::size_t{1} << n);
    for (SubsetMask set : order_) {
      auto& list = uppers_[set];
      for_each_k_subset_of(full_mask(n) & ~set, t - cardinality(set),
                           [&](SubsetMask added) { list.push_back(set | added); });
    }
  }

  bool solve() { return descend(0); }

private:
  bool descend(std::size_t cursor) {
    while (cursor < order_.size() && assigned_[order_[cursor]]) ++cursor;
    if (cursor == order_.size()) return true;
    const SubsetMask lower = order_[cursor];
    for (SubsetMask upper : uppers_[lower]) {
      if (!interval_free(lower, upper)) continue;
      if (++nodes_ > budget_) throw BudgetOut{};
      mark(lower, upper, 1);
      if (still_coverable(cursor + 1) && descend(cursor + 1)) return true;
      mark(lower, upper, 0);
    }
    return false;
  }

  bool interval_free(SubsetMask lower, SubsetMask upper) const {
    bool free = true;
    for_each_submask(upper & ~lower, [&](SubsetMask extra) {
      free = !assigned_[lower | extra];
      return free;
    });
    return free;
  }

  void mark(SubsetMask lower, SubsetMask upper, std::uint8_t value) {
    for_each_submask(upper & ~lower, [&](SubsetMask extra) { assigned_[lower | extra] = value; });
  }

  // Every unplaced set still needs some unplaced t-superset to serve as an upper endpoint.
  bool still_coverable(std::size_t from) const {
    for (std::size_t i = from; i < order_.size(); ++i) {
      const SubsetMask set = order_[i];
      if (assigned_[set]) continue;
      bool open = false;
      for (SubsetMask upper : uppers_[set]) {
        if (!assigned_[upper]) {
          open = true;
          break;
        }
      }
      if (!open) return false;
    }
    return true;
  }

  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<std::uint8_t> assigned_;
  std::vector<SubsetMask> order_;
  std::vector<std::vector<SubsetMask>> uppers_;
};

void check_oracle_args(int n, int d) {
  if (d < 1 || d > n) fail(ErrorKind::InvalidArgument, "oracle needs 1 <= d <= n");
  if (n > kOracleMaxN) fail(ErrorKind::InvalidArgument, "oracle is limited to n <= 12");
}

}  // namespace

bool partition_with_min_upper_exists(int n, int d, int t, std::uint64_t budget) {
  check_oracle_args(n, d);
  if (t <= d) return true;
  if (t > n) return false;
  std::uint64_t nodes = 0;
  try {
    return CoverSearch(n, d, t, budget, nodes).solve();
  } catch (const BudgetOut&) {
    fail(ErrorKind::BudgetExhausted, "oracle budget of " + std::to_string(budget) + " nodes exhausted at t=" +
                                         std::to_string(t));
  }
}

OracleOutcome exact_sdepth_search(int n, int d, std::uint64_t budget) {
  check_oracle_args(n, d);
  OracleOutcome outcome;
  for (int t = n; t > d; --t) {
    try {
      if (CoverSearch(n, d, t, budget, outcome.nodes).solve()) {
        outcome.value = t;
        return outcome;
      }
    } catch (const BudgetOut&) {
      outcome.budget_exhausted = true;
      return outcome;
    }
  }
  outcome.value = d;
  return outcome;
}

std::optional<int> exact_sdepth(int n, int d, std::uint64_t budget) {
  return exact_sdepth_search(n, d, budget).value;
}

}  // namespace sdepth
