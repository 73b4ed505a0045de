#include "sdepth/partition_builder.hpp"

#include <algorithm>
#include <string>

#include "sdepth/error.hpp"

namespace sdepth {

namespace {

// Largest n for which the trivial completion marks covered sets in a 2^n bitmap.
constexpr int kBitmapLimit = 28;

struct LayerPlan {
  int lower_size;
  int s;  // lift shift; the layer's density is s + 1
};

// Layer 0 at shift k, then levels d+1..d+k-1 at shift k-1 (k = 1, 2 and the mid range).
std::vector<LayerPlan> plan_mid(const RegimeDecomposition& rd) {
  std::vector<LayerPlan> plan{{rd.d, rd.k}};
  for (int l = 1; l < rd.k; ++l) plan.push_back({rd.d + l, rd.k - 1});
  return plan;
}

// Layer 0 at shift k, then levels d+1..d+s at the common density s+1.
std::vector<LayerPlan> plan_large(const RegimeDecomposition& rd) {
  const int s = large_n_density_shift(rd.n, rd.d);
  std::vector<LayerPlan> plan{{rd.d, rd.k}};
  for (int q = 1; q <= s; ++q) plan.push_back({rd.d + q, s});
  return plan;
}

// Later layers are pairwise compared through the lifted-interval disjointness criterion,
// which needs eta <= delta and (d+l+1)eta >= (d+q+1)delta for an earlier level q < l.
// Layer 0 is a complete family and is handled by superset closure instead.
void assert_layer_hypotheses(const std::vector<LayerPlan>& plan) {
  for (std::size_t later = 2; later < plan.size(); ++later) {
    for (std::size_t earlier = 1; earlier < later; ++earlier) {
      const std::int64_t delta = plan[earlier].s + 1;
      const std::int64_t eta = plan[later].s + 1;
      if (eta > delta || (plan[later].lower_size + 1) * eta < (plan[earlier].lower_size + 1) * delta) {
        fail(ErrorKind::Internal, "layer densities violate the cross-level disjointness hypothesis");
      }
    }
  }
}

class CoveredBitmap {
public:
  explicit CoveredBitmap(int n) : bits_((std::size_t{1} << n) / 64 + 1, 0) {}

  void mark(const PosetInterval& iv) {
    for_each_submask(iv.upper & ~iv.lower, [&](SubsetMask extra) {
      const SubsetMask set = iv.lower | extra;
      bits_[set / 64] |= std::uint64_t{1} << (set % 64);
    });
  }
  bool test(SubsetMask set) const { return (bits_[set / 64] >> (set % 64)) & 1U; }

private:
  std::vector<std::uint64_t> bits_;
};

BuildResult run_layers(const RegimeDecomposition& rd, const std::vector<LayerPlan>& plan,
                       const BuildOptions& options, bool check_hypotheses, bool require_next_level_covered) {
  const int n = rd.n;
  const int d = rd.d;
  require(n <= kMaxMaskUniverse, ErrorKind::InvalidArgument, "partitions are limited to n <= 64");
  if (check_hypotheses) assert_layer_hypotheses(plan);

  BuildResult result;
  IntervalPartition& p = result.partition;
  p.n = n;
  p.d = d;
  p.regime = rd;
  p.implicit_trivial = !options.materialize_trivial;

  std::vector<IntervalFamily> selected;
  int max_upper = 0;
  for (std::size_t index = 0; index < plan.size(); ++index) {
    const auto& step = plan[index];
    IntervalFamily family = interval_family(validate_lift_params(n, step.lower_size, step.s));
    LayerTrace trace{{false, step.lower_size, step.s + 1}, family.size(), 0, 0};

    if (index > 0) {
      std::vector<bool> keep(family.size());
      for (std::size_t i = 0; i < family.size(); ++i) {
        keep[i] = !coverage_query(family.intervals()[i].lower, selected);
      }
      family = family.filtered(keep);
    }
    trace.selected = family.size();
    trace.discarded = trace.candidates - trace.selected;
    result.trace.layers.push_back(trace);

    const auto tag = static_cast<std::uint8_t>(p.layers.size());
    p.layers.push_back(trace.layer);
    for (const auto& iv : family.intervals()) {
      p.intervals.push_back(iv);
      p.layer_of.push_back(tag);
    }
    max_upper = std::max(max_upper, family.upper_size());
    result.trace.min_nontrivial_upper = result.trace.min_nontrivial_upper == 0
                                            ? family.upper_size()
                                            : std::min(result.trace.min_nontrivial_upper, family.upper_size());
    selected.push_back(std::move(family));

    if (index == 0 && require_next_level_covered) {
      std::uint64_t missing = 0;
      for_each_k_subset(n, d + 1, [&](SubsetMask set) {
        if (!coverage_query(set, selected)) ++missing;
      });
      if (missing != 0) {
        fail(ErrorKind::Internal, std::to_string(missing) + " (d+1)-subsets escape the first layer");
      }
    }
  }

  if (!options.materialize_trivial) return result;

  const auto trivial_tag = static_cast<std::uint8_t>(p.layers.size());
  p.layers.push_back({true, 0, 0});
  std::uint64_t trivial = 0;
  auto add_trivial = [&](SubsetMask set) {
    p.intervals.push_back({set, set});
    p.layer_of.push_back(trivial_tag);
    ++trivial;
  };

  if (n <= kBitmapLimit) {
    CoveredBitmap covered(n);
    for (const auto& iv : p.intervals) covered.mark(iv);
    for (int size = d; size <= n; ++size) {
      for_each_k_subset(n, size, [&](SubsetMask set) {
        if (!covered.test(set)) add_trivial(set);
      });
    }
  } else {
    for (int size = d; size <= n; ++size) {
      for_each_k_subset(n, size, [&](SubsetMask set) {
        if (size > max_upper || !coverage_query(set, selected)) add_trivial(set);
      });
    }
  }
  result.trace.trivial_count = trivial;
  return result;
}

}  // namespace

bool coverage_query(SubsetMask d_set, const std::vector<IntervalFamily>& selected_layers) {
  return std::any_of(selected_layers.begin(), selected_layers.end(),
                     [&](const IntervalFamily& layer) { return is_covered(d_set, layer); });
}

BuildResult build_partition(int n, int d, const BuildOptions& options) {
  const RegimeDecomposition rd = regime_of(n, d);
  switch (rd.regime) {
    case Regime::TrivialRange:
      return run_layers(rd, {}, options, true, false);
    case Regime::K1:
    case Regime::K2:
    case Regime::Mid:
      return run_layers(rd, plan_mid(rd), options, true, false);
    case Regime::Large:
      return run_layers(rd, plan_large(rd), options, true, false);
  }
  fail(ErrorKind::Internal, "unhandled regime");
}

BuildResult build_partition_k3(int d, const BuildOptions& options) {
  require(d >= 1, ErrorKind::InvalidArgument, "k3 construction needs d >= 1");
  const int n = 4 * d + 3;
  return run_layers(regime_of(n, d), {{d, 3}, {d + 2, 1}}, options, true, true);
}

BuildResult build_partition_k3_range(int n, int d, const BuildOptions& options) {
  require(d >= 1, ErrorKind::InvalidArgument, "k3 range construction needs d >= 1");
  if (n <= 4 * d + 3 || n > 5 * d + 3) {
    fail(ErrorKind::InvalidArgument, "k3 range construction needs 4d+3 < n <= 5d+3");
  }
  // Densities 4, 3, 2 fall outside the cross-level hypothesis; disjointness rests on verification.
  return run_layers(regime_of(n, d), {{d, 3}, {d + 1, 2}, {d + 2, 1}}, options, false, false);
}

}  // namespace sdepth
