#include "sdepth/density.hpp"

#include <charconv>
#include <numeric>

#include "sdepth/error.hpp"

namespace sdepth {

namespace {

std::int64_t parse_int(std::string_view token) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(ErrorKind::Parse, "malformed density component '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Density::Density(std::int64_t value) : Density(value, 1) {}

Density::Density(std::int64_t numerator, std::int64_t denominator) {
  if (numerator <= 0 || denominator <= 0) {
    fail(ErrorKind::DensityOutOfRange, "density must be a positive rational");
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Density Density::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Density(parse_int(text));
  return Density(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Density::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace sdepth
