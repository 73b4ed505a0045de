#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sdepth/formulas.hpp"
#include "sdepth/oracle.hpp"

namespace sdepth {

/// What is known about sdepth(I_{n,d}) at this instance.
///
/// Invariants: certified_lower <= upper_bound_formula, and when oracle_exact is present,
/// certified_lower <= oracle_exact <= upper_bound_formula.
struct SdepthReport {
  int n = 0;
  int d = 0;
  int conjectured = 0;
  int upper_bound_formula = 0;
  int certified_lower = 0;
  std::optional<int> oracle_exact;
  bool oracle_budget_exhausted = false;
  RegimeDecomposition regime;
  bool verified = false;    ///< the certificate behind certified_lower passed verification
  std::string certificate;  ///< "layered", "k3" or "k3-range"

  bool conjecture_certified() const noexcept { return verified && certified_lower == upper_bound_formula; }
};

struct ReportOptions {
  bool run_oracle = false;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

/// Builds every applicable construction (with implicit singleton completion), verifies
/// each and keeps the best verified bound. Throws Error(Internal) if an invariant breaks.
SdepthReport make_report(int n, int d, const ReportOptions& options = {});

/// key=value lines, one per field.
std::string machine_lines(const SdepthReport& report);

}  // namespace sdepth
