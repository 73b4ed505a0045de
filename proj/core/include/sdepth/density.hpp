#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sdepth {

/// Exact positive rational density num/den in lowest terms.
///
/// Nothing here enforces delta >= 1; callers that need it check is_at_least_one().
class Density {
public:
  constexpr Density() = default;
  Density(std::int64_t value);  // NOLINT(google-explicit-constructor): integers are densities
  Density(std::int64_t numerator, std::int64_t denominator);

  /// "2" or "3/2". Throws Error(Parse).
  static Density parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  bool is_at_least_one() const noexcept { return num_ >= den_; }

  /// Sign of (value - delta * count), evaluated without rounding.
  std::strong_ordering compare_scaled(std::int64_t value, std::int64_t count) const noexcept {
    return static_cast<__int128>(value) * den_ <=> static_cast<__int128>(num_) * count;
  }

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Density& a, const Density& b) noexcept {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator==(const Density& a, const Density& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

}  // namespace sdepth
