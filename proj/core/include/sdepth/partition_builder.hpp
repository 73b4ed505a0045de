#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdepth/formulas.hpp"
#include "sdepth/interval.hpp"
#include "sdepth/lifted_intervals.hpp"

namespace sdepth {

/// Provenance of an interval: the lifted family I_{n, lower_size, density}, or a singleton.
struct LayerInfo {
  bool trivial = false;
  int lower_size = 0;
  int density = 0;

  friend bool operator==(const LayerInfo&, const LayerInfo&) = default;
};

/// An interval partition of the poset of subsets of [n] with at least d elements.
///
/// With implicit_trivial set, `intervals` lists only the nontrivial part and every set
/// of size >= d outside them is understood as its own singleton interval.
struct IntervalPartition {
  int n = 0;
  int d = 0;
  RegimeDecomposition regime;
  std::vector<PosetInterval> intervals;
  std::vector<LayerInfo> layers;          ///< provenance table
  std::vector<std::uint8_t> layer_of;     ///< per interval index into `layers`; empty if unknown
  bool implicit_trivial = false;
};

struct LayerTrace {
  LayerInfo layer;
  std::uint64_t candidates = 0;
  std::uint64_t selected = 0;
  std::uint64_t discarded = 0;  ///< candidates whose left endpoint an earlier layer covers
};

struct BuilderTrace {
  std::vector<LayerTrace> layers;
  std::optional<std::uint64_t> trivial_count;  ///< absent when the completion is implicit
  int min_nontrivial_upper = 0;                ///< 0 when no layer was built
};

struct BuildOptions {
  /// Emit the singleton completion explicitly. Needs n <= 28 for the covered-set bitmap
  /// or falls back to per-set coverage queries.
  bool materialize_trivial = true;
};

struct BuildResult {
  IntervalPartition partition;
  BuilderTrace trace;
};

/// Layered construction for I_{n,d}, dispatched on regime_of(n, d).
BuildResult build_partition(int n, int d, const BuildOptions& options = {});

/// The n = 4d+3 construction: I_{n,d,4}, then I_{n,d+2,2} on uncovered left endpoints.
/// Asserts that layer 0 covers every (d+1)-subset.
BuildResult build_partition_k3(int d, const BuildOptions& options = {});

/// For 4d+3 < n <= 5d+3: I_{n,d,4}, then I_{n,d+1,3} and I_{n,d+2,2}, each on the left
/// endpoints the earlier layers leave uncovered. Every upper endpoint has d+3 elements.
/// Throws Error(InvalidArgument) outside that range.
BuildResult build_partition_k3_range(int n, int d, const BuildOptions& options = {});

/// Whether some interval of the frozen layers contains D, probing each layer's
/// left-endpoint index with the subsets of D of that layer's lower size.
bool coverage_query(SubsetMask d_set, const std::vector<IntervalFamily>& selected_layers);

}  // namespace sdepth
