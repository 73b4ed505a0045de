#include "sdepth/lifted_intervals.hpp"

#include <algorithm>

#include "sdepth/error.hpp"

namespace sdepth {

std::string to_string(const PosetInterval& interval) {
  return mask_to_string(interval.lower) + ";" + mask_to_string(interval.upper);
}

int max_lift_shift(int n, int level_size) {
  return (n - level_size) / (level_size + 1);
}

LiftParams validate_lift_params(int n, int level_size, int s) {
  if (level_size < 1 || level_size >= n) {
    fail(ErrorKind::InvalidArgument, "lift needs 1 <= level_size < n, got level_size=" +
                                         std::to_string(level_size) + " n=" + std::to_string(n));
  }
  if (s < 1) fail(ErrorKind::SOutOfRange, "lift shift s must be positive");
  if (s > max_lift_shift(n, level_size)) {
    fail(ErrorKind::SOutOfRange, "s=" + std::to_string(s) + " exceeds floor((n-level)/(level+1))=" +
                                     std::to_string(max_lift_shift(n, level_size)));
  }
  const LiftParams params{n, level_size, s, (n + 1) * s + n};
  const std::int64_t m = params.m;
  const bool larger = m > n;
  const bool density_fits = static_cast<std::int64_t>(s + 1) * n <= m - 1;
  const bool padding_fits = m - n <= static_cast<std::int64_t>(s + 1) * (n - level_size) && n - level_size < m - n;
  if (!(larger && density_fits && padding_fits)) {
    fail(ErrorKind::Internal, "lift parameters violate the m > n / density / padding inequalities");
  }
  return params;
}

namespace {

CircularSet lift_mask(SubsetMask a, const LiftParams& params) {
  CircularSet out = CircularSet::from_mask(params.n, a).embedded_in(params.m);
  for (int x = params.n + 1; x <= 2 * params.n - params.level_size; ++x) out.insert(x);
  return out;
}

}  // namespace

CircularSet lift(const CircularSet& a, const LiftParams& params) {
  if (a.universe() != params.n || a.size() != params.level_size) {
    fail(ErrorKind::SizeMismatch, "lift expects a " + std::to_string(params.level_size) + "-subset of [" +
                                      std::to_string(params.n) + "], got |A|=" + std::to_string(a.size()) +
                                      " over [" + std::to_string(a.universe()) + "]");
  }
  CircularSet out = a.embedded_in(params.m);
  for (int x = params.n + 1; x <= 2 * params.n - params.level_size; ++x) out.insert(x);
  return out;
}

PosetInterval lifted_closure(SubsetMask a, const LiftParams& params) {
  if (cardinality(a) != params.level_size || (a & ~full_mask(params.n)) != 0) {
    fail(ErrorKind::SizeMismatch, "lifted closure expects a " + std::to_string(params.level_size) +
                                      "-subset of [" + std::to_string(params.n) + "]");
  }
  const CircularSet lifted = lift_mask(a, params);
  const BlockStructure bs = block_structure(lifted, Density(params.density()));
  const CircularSet gaps = bs.gap_union();

  if (lifted.size() + gaps.size() != params.n + params.s) {
    fail(ErrorKind::Internal, "|f_{s+1}(lift A)| != n + s for A=" + mask_to_string(a));
  }
  for (int x = params.n + 1; x <= params.m; ++x) {
    if (gaps.contains(x)) fail(ErrorKind::Internal, "padding position " + std::to_string(x) + " fell into a gap");
  }
  const SubsetMask upper = a | gaps.restricted_to(params.n).to_mask();
  if (cardinality(upper) != params.upper_size()) {
    fail(ErrorKind::Internal, "lifted closure of " + mask_to_string(a) + " has the wrong size");
  }
  return {a, upper};
}

PosetInterval lifted_closure(const CircularSet& a, const LiftParams& params) {
  if (a.universe() != params.n || a.size() != params.level_size) {
    fail(ErrorKind::SizeMismatch, "lifted closure expects a " + std::to_string(params.level_size) +
                                      "-subset of [" + std::to_string(params.n) + "]");
  }
  return lifted_closure(a.to_mask(), params);
}

IntervalFamily::IntervalFamily(const LiftParams& params, std::vector<PosetInterval> intervals)
    : params_(params), intervals_(std::move(intervals)) {
  require(params_.n <= kMaxMaskUniverse, ErrorKind::InvalidArgument, "interval families need n <= 64");
  upper_by_rank_.assign(binomial(params_.n, params_.level_size), 0);
  for (const auto& iv : intervals_) {
    if (cardinality(iv.lower) != params_.level_size) {
      fail(ErrorKind::InvalidArgument, "family interval has the wrong lower size");
    }
    upper_by_rank_[colex_rank(iv.lower)] = iv.upper;
  }
}

SubsetMask IntervalFamily::upper_of(SubsetMask lower) const {
  if (cardinality(lower) != params_.level_size || (lower & ~full_mask(params_.n)) != 0) return 0;
  return upper_by_rank_[colex_rank(lower)];
}

IntervalFamily IntervalFamily::filtered(const std::vector<bool>& keep) const {
  require(keep.size() == intervals_.size(), ErrorKind::InvalidArgument, "filter mask size mismatch");
  std::vector<PosetInterval> kept;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (keep[i]) kept.push_back(intervals_[i]);
  }
  return IntervalFamily(params_, std::move(kept));
}

IntervalFamily interval_family(const LiftParams& params) {
  std::vector<PosetInterval> intervals;
  intervals.reserve(binomial(params.n, params.level_size));
  for_each_k_subset(params.n, params.level_size,
                    [&](SubsetMask a) { intervals.push_back(lifted_closure(a, params)); });
  return IntervalFamily(params, std::move(intervals));
}

IntervalFamily interval_family(int n, int d, int l, int s) {
  return interval_family(validate_lift_params(n, d + l, s));
}

bool is_covered(SubsetMask d_set, const IntervalFamily& family) {
  const int size = cardinality(d_set);
  if (size < family.lower_size() || size > family.upper_size()) return false;
  bool covered = false;
  for_each_k_subset_of(d_set, family.lower_size(), [&](SubsetMask lower) {
    const SubsetMask upper = family.upper_of(lower);
    covered = upper != 0 && is_subset(d_set, upper);
    return !covered;
  });
  return covered;
}

bool is_covered(const CircularSet& d_set, const IntervalFamily& family) {
  if (d_set.universe() != family.n()) fail(ErrorKind::UniverseMismatch, "set and family universes differ");
  return is_covered(d_set.to_mask(), family);
}

bool check_superset_closure(SubsetMask d_set, const IntervalFamily& family) {
  if (cardinality(d_set) < family.lower_size()) {
    fail(ErrorKind::PreconditionViolated, "superset closure needs |D| >= " + std::to_string(family.lower_size()));
  }
  if (is_covered(d_set, family)) {
    fail(ErrorKind::PreconditionViolated, "superset closure asked for a covered set " + mask_to_string(d_set));
  }
  const SubsetMask outside = full_mask(family.n()) & ~d_set;
  const int room = family.upper_size() - cardinality(d_set);
  for (int extra = 1; extra <= room; ++extra) {
    bool clean = true;
    for_each_k_subset_of(outside, extra, [&](SubsetMask added) {
      clean = !is_covered(d_set | added, family);
      return clean;
    });
    if (!clean) return false;
  }
  return true;
}

bool check_superset_closure(const CircularSet& d_set, const IntervalFamily& family) {
  if (d_set.universe() != family.n()) fail(ErrorKind::UniverseMismatch, "set and family universes differ");
  return check_superset_closure(d_set.to_mask(), family);
}

bool check_density_disjoint(const CircularSet& a, const CircularSet& b, const Density& delta, const Density& eta) {
  if (a.universe() != b.universe()) fail(ErrorKind::UniverseMismatch, "A and B live on different circles");
  const int n = a.universe();
  if (a.size() > b.size()) fail(ErrorKind::PreconditionViolated, "needs |A| <= |B|");
  if (delta < eta || !eta.is_at_least_one()) fail(ErrorKind::PreconditionViolated, "needs delta >= eta >= 1");
  if (delta.compare_scaled(n - 1, a.size()) < 0) fail(ErrorKind::PreconditionViolated, "needs delta|A| <= n-1");
  if (eta.compare_scaled(n - 1, b.size()) < 0) fail(ErrorKind::PreconditionViolated, "needs eta|B| <= n-1");

  const CircularSet fa = f_delta(a, delta);
  const CircularSet fb = f_delta(b, eta);
  const bool hypothesis = eta.compare_scaled(fb.size() - b.size() + 1, 1) <= 0 && !a.is_subset_of(b);
  if (!hypothesis) return true;
  const CircularSet meet = a | b;
  return !(meet.is_subset_of(fa) && meet.is_subset_of(fb));
}

bool check_cross_level_disjoint(const CircularSet& c, const CircularSet& d_set, int d, int q, int l, int delta, int eta) {
  if (c.universe() != d_set.universe()) fail(ErrorKind::UniverseMismatch, "C and D live on different circles");
  const int n = c.universe();
  auto violated = [](const std::string& what) { fail(ErrorKind::PreconditionViolated, what); };
  if (d < 1) violated("d >= 1");
  if (c.size() != d + q) violated("|C| = d+q");
  if (d_set.size() != d + l) violated("|D| = d+l");
  if (q < 0 || q > l) violated("0 <= q <= l");
  if (eta > delta) violated("eta <= delta");
  if (eta < 2) violated("eta >= 2 (the lift of D needs s = eta-1 >= 1)");
  if (eta > (n + 1) / (d + l + 1)) violated("eta <= floor((n+1)/(d+l+1))");
  if (delta > (n + 1) / (d + q + 1)) violated("delta <= floor((n+1)/(d+q+1))");
  if (static_cast<std::int64_t>(d + l + 1) * eta < static_cast<std::int64_t>(d + q + 1) * delta) {
    violated("(d+l+1)eta >= (d+q+1)delta");
  }
  const PosetInterval c_interval = lifted_closure(c, validate_lift_params(n, d + q, delta - 1));
  const PosetInterval d_interval = lifted_closure(d_set, validate_lift_params(n, d + l, eta - 1));
  if (c_interval.contains(d_set.to_mask())) return true;
  return !intervals_intersect(c_interval, d_interval);
}

BlockStructure extended_block_structure(const CircularSet& lifted, int target_m, const Density& eta) {
  const int m_prime = lifted.universe();
  if (target_m < m_prime) fail(ErrorKind::PreconditionViolated, "target_m must be at least m'");
  BlockStructure bs = block_structure(lifted, eta);
  const auto padding = std::find_if(bs.blocks.begin(), bs.blocks.end(),
                                    [&](const CircularBlock& b) { return b.contains(m_prime); });
  if (padding == bs.blocks.end()) {
    fail(ErrorKind::PreconditionViolated, "position m'=" + std::to_string(m_prime) + " is not in a block");
  }
  padding->length += target_m - m_prime;
  bs.universe = target_m;
  for (auto& b : bs.blocks) b.universe = target_m;
  for (auto& g : bs.gaps) g.universe = target_m;
  return bs;
}

}  // namespace sdepth
