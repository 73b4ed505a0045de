#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sdepth/block_structure.hpp"
#include "sdepth/circular_set.hpp"
#include "sdepth/error.hpp"
#include "sdepth/partition_builder.hpp"
#include "sdepth/partition_file.hpp"
#include "sdepth/report.hpp"
#include "sdepth/verifier.hpp"

namespace sdepth::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

IntRange parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  auto parse_int = [&](std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw UsageError(std::string(flag) + " expects a..b, got '" + text + "'");
    }
    return value;
  };
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const IntRange r{parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
  if (r.lo < 1 || r.hi < r.lo) throw UsageError(std::string(flag) + " needs 1 <= a <= b");
  return r;
}

void check_nd(int n, int d) {
  if (d < 1 || d > n) throw UsageError("need 1 <= d <= n");
  if (n > kMaxMaskUniverse) throw UsageError("n is limited to 64");
}

void print_report(const SdepthReport& r, std::ostream& out) {
  out << "Stanley depth of I_{" << r.n << "," << r.d << "}\n"
      << "  regime           " << to_string(r.regime.regime) << " (k=" << r.regime.k << ", r=" << r.regime.r << ")\n"
      << "  conjectured      " << r.conjectured << "\n"
      << "  upper bound      " << r.upper_bound_formula << "\n"
      << "  certified lower  " << r.certified_lower << " via " << r.certificate
      << (r.verified ? " (verified)" : " (UNVERIFIED)") << "\n";
  if (r.oracle_exact) {
    out << "  exact (oracle)   " << *r.oracle_exact << "\n";
  } else if (r.oracle_budget_exhausted) {
    out << "  exact (oracle)   budget exhausted\n";
  }
  out << "\n" << machine_lines(r);
}

int cmd_report(int n, int d, bool oracle, std::uint64_t budget, std::ostream& out) {
  check_nd(n, d);
  const SdepthReport r = make_report(n, d, {oracle, budget});
  print_report(r, out);
  return r.conjecture_certified() ? kSuccess : kBoundsOnly;
}

int cmd_build(int n, int d, const std::string& path, bool k3, std::uint64_t cap, std::ostream& out,
              std::ostream& err) {
  check_nd(n, d);
  if (k3 && n != 4 * d + 3) throw UsageError("--k3 needs n = 4d+3");
  const std::uint64_t poset = count_subsets_in_range(n, d, n);
  if (poset > cap) {
    throw UsageError("poset has " + std::to_string(poset) + " sets, above --cap " + std::to_string(cap));
  }
  const BuildResult built = k3 ? build_partition_k3(d) : build_partition(n, d);
  const VerificationVerdict verdict = verify_partition(built.partition);
  if (!verdict.ok()) {
    err << "built partition failed verification; nothing written\n" << verdict.describe(built.partition);
    return kInternalVerification;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  write_partition(file, built.partition);
  file.close();
  if (!file) throw UsageError("failed writing '" + path + "'");
  out << "intervals=" << verdict.interval_count << "\n"
      << "min_upper_size=" << verdict.min_upper_size << "\n";
  return kSuccess;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  IntervalPartition p;
  try {
    p = read_partition(file);
  } catch (const PartitionParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  }
  const VerificationVerdict verdict = verify_partition(p);
  out << verdict.describe(p);
  if (!verdict.ok()) {
    out << "verdict=INVALID\n";
    return kInvalidCertificate;
  }
  out << "verdict=VALID\n";
  return kSuccess;
}

int cmd_table(const std::string& d_text, const std::string& n_text, std::uint64_t cap, std::ostream& out) {
  const IntRange ds = parse_range(d_text, "--d-range");
  const IntRange ns = parse_range(n_text, "--n-range");
  if (ns.hi > kMaxMaskUniverse) throw UsageError("n is limited to 64");
  out << "n,d,regime,conjectured,certified_lower,upper_bound,verified\n";
  for (int d = ds.lo; d <= ds.hi; ++d) {
    for (int n = std::max(ns.lo, d); n <= ns.hi; ++n) {
      const RegimeDecomposition rd = regime_of(n, d);
      const int conj = conjectured_sdepth(n, d);
      out << n << ',' << d << ',' << to_string(rd.regime) << ',' << conj << ',';
      if (binomial(n, (n + 1) / 2) > cap) {
        out << "SKIPPED(cap)," << conj << ",SKIPPED(cap)\n";
        continue;
      }
      const SdepthReport r = make_report(n, d);
      out << r.certified_lower << ',' << r.upper_bound_formula << ',' << (r.verified ? "yes" : "no") << '\n';
    }
  }
  return kSuccess;
}

int cmd_blocks(int n, const std::string& set_text, const std::string& density_text, std::ostream& out) {
  if (n < 1) throw UsageError("-n must be positive");
  CircularSet a;
  Density delta;
  try {
    a = CircularSet::parse(n, set_text);
    delta = Density::parse(density_text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  BlockStructure bs;
  try {
    bs = block_structure(a, delta);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Internal) throw;
    throw UsageError(e.what());
  }
  out << bs.render() << "\n"
      << "f=" << (a | bs.gap_union()).to_string() << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval partitions and Stanley depth of squarefree Veronese ideals"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int n = 0;
  int d = 0;
  bool oracle = false;
  bool k3 = false;
  std::uint64_t budget = kDefaultOracleBudget;
  std::uint64_t cap = kDefaultCap;
  std::string path;
  std::string d_range;
  std::string n_range;
  std::string format = "csv";
  std::string set_text;
  std::string density_text;

  auto* report = app.add_subcommand("report", "Conjectured value, bounds and certified lower bound");
  report->add_option("-n", n, "Number of variables")->required();
  report->add_option("-d", d, "Generator degree")->required();
  report->add_flag("--oracle", oracle, "Also run the exact search (small n only)");
  report->add_option("--budget", budget, "Node budget for --oracle");

  auto* build = app.add_subcommand("build", "Build, verify and write a partition file");
  build->add_option("-n", n, "Number of variables")->required();
  build->add_option("-d", d, "Generator degree")->required();
  build->add_option("--out", path, "Output path")->required();
  build->add_flag("--k3", k3, "Use the n = 4d+3 construction");
  build->add_option("--cap", cap, "Refuse posets with more sets than this");

  auto* verify = app.add_subcommand("verify", "Check a partition file");
  verify->add_option("--in", path, "Partition file")->required();

  auto* table = app.add_subcommand("table", "CSV of bounds over ranges of d and n");
  table->add_option("--d-range", d_range, "a..b")->required();
  table->add_option("--n-range", n_range, "c..e")->required();
  table->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));
  table->add_option("--cap", cap, "Skip rows with C(n, ceil(n/2)) above this");

  auto* blocks = app.add_subcommand("blocks", "Block structure of a set at a density");
  blocks->add_option("-n", n, "Circle size")->required();
  blocks->add_option("--set", set_text, "Members, e.g. 1,3,7")->required();
  blocks->add_option("--density", density_text, "Density, e.g. 2 or 3/2")->required();

  try {
    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(std::move(rest));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*report) return cmd_report(n, d, oracle, budget, out);
    if (*build) return cmd_build(n, d, path, k3, cap, out, err);
    if (*verify) return cmd_verify(path, out, err);
    if (*table) return cmd_table(d_range, n_range, cap, out);
    if (*blocks) return cmd_blocks(n, set_text, density_text, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    err << "internal error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kInternalVerification;
  }
  return kUsage;
}

}  // namespace sdepth::cli
