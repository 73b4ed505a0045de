#pragma once

#include <string>
#include <string_view>

namespace sdepth {

/// Construction regime for I_{n,d}, keyed on n = (d+1)k + d + r.
enum class Regime { TrivialRange, K1, K2, Mid, Large };

std::string_view to_string(Regime regime) noexcept;
/// Throws Error(Parse) on an unknown tag.
Regime parse_regime(std::string_view tag);

struct RegimeDecomposition {
  int n = 0;
  int d = 0;
  int k = 0;  ///< 0 in the trivial range d <= n <= 2d
  int r = 0;  ///< 0 <= r <= d; n = (d+1)k + d + r always holds
  Regime regime = Regime::TrivialRange;

  friend bool operator==(const RegimeDecomposition&, const RegimeDecomposition&) = default;
};

/// floor(C(n,d+1)/C(n,d)) + d, evaluated as floor((n-d)/(d+1)) + d.
int conjectured_sdepth(int n, int d);

/// floor((1 + sqrt(5+4d))/2), the largest t with (2t-1)^2 <= 5+4d.
int threshold_multiplier(int d);

/// (d+1) * floor((1 + sqrt(5+4d))/2) + 2d: the largest n where the layered
/// construction certifies the conjectured value.
int threshold(int d);

/// floor((d + sqrt(d^2 + 4(n+1)))/2), the certified lower bound past threshold(d).
int lower_bound_large_n(int n, int d);

/// s = floor((-(d+2) + sqrt(d^2 + 4(n+1)))/2), the common density shift of the
/// upper layers past threshold(d). Requires n > threshold(d).
int large_n_density_shift(int n, int d);

RegimeDecomposition regime_of(int n, int d);

}  // namespace sdepth
