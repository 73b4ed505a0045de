#include "sdepth/report.hpp"

#include <sstream>

#include "sdepth/error.hpp"
#include "sdepth/partition_builder.hpp"
#include "sdepth/verifier.hpp"

namespace sdepth {

SdepthReport make_report(int n, int d, const ReportOptions& options) {
  SdepthReport report;
  report.n = n;
  report.d = d;
  report.regime = regime_of(n, d);
  report.conjectured = conjectured_sdepth(n, d);
  report.upper_bound_formula = report.conjectured;

  const BuildOptions implicit{false};
  auto consider = [&](const BuildResult& built, const char* name) {
    const VerificationVerdict verdict = verify_partition(built.partition);
    if (!verdict.ok()) return;
    if (!report.verified || verdict.min_upper_size > report.certified_lower) {
      report.verified = true;
      report.certified_lower = verdict.min_upper_size;
      report.certificate = name;
    }
  };
  consider(build_partition(n, d, implicit), "layered");
  if (n == 4 * d + 3) consider(build_partition_k3(d, implicit), "k3");
  if (n > 4 * d + 3 && n <= 5 * d + 3) consider(build_partition_k3_range(n, d, implicit), "k3-range");

  if (report.verified && report.certified_lower > report.upper_bound_formula) {
    fail(ErrorKind::Internal, "certified bound exceeds the formula upper bound");
  }
  if (options.run_oracle) {
    const OracleOutcome outcome = exact_sdepth_search(n, d, options.oracle_budget);
    report.oracle_exact = outcome.value;
    report.oracle_budget_exhausted = outcome.budget_exhausted;
    if (outcome.value && (*outcome.value < report.certified_lower || *outcome.value > report.upper_bound_formula)) {
      fail(ErrorKind::Internal, "oracle value falls outside [certified, upper bound]");
    }
  }
  return report;
}

std::string machine_lines(const SdepthReport& report) {
  std::ostringstream out;
  out << "n=" << report.n << '\n'
      << "d=" << report.d << '\n'
      << "regime=" << to_string(report.regime.regime) << '\n'
      << "k=" << report.regime.k << '\n'
      << "r=" << report.regime.r << '\n'
      << "conjectured=" << report.conjectured << '\n'
      << "upper_bound=" << report.upper_bound_formula << '\n'
      << "certified_lower=" << report.certified_lower << '\n'
      << "certificate=" << report.certificate << '\n'
      << "verified=" << (report.verified ? "yes" : "no") << '\n';
  if (report.oracle_exact) {
    out << "oracle_exact=" << *report.oracle_exact << '\n';
  } else if (report.oracle_budget_exhausted) {
    out << "oracle_exact=BUDGET_EXHAUSTED" << '\n';
  }
  out << "conjecture_certified=" << (report.conjecture_certified() ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace sdepth
