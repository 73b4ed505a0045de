#include "sdepth/partition_file.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "sdepth/circular_set.hpp"
#include "sdepth/error.hpp"

namespace sdepth {

namespace {

int header_field(std::string_view token, std::string_view key, std::size_t line) {
  if (token.substr(0, key.size()) != key) {
    throw PartitionParseError(line, "expected '" + std::string(key) + "' in header");
  }
  const std::string_view digits = token.substr(key.size());
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw PartitionParseError(line, "malformed header value '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

void write_partition(std::ostream& out, const IntervalPartition& p) {
  if (p.implicit_trivial) fail(ErrorKind::InvalidArgument, "cannot write a partition with an implicit completion");
  out << "n=" << p.n << " d=" << p.d << " regime=" << to_string(p.regime.regime) << '\n';
  std::string line;
  for (const auto& iv : p.intervals) {
    line = mask_to_string(iv.lower);
    line += ';';
    line += mask_to_string(iv.upper);
    line += '\n';
    out << line;
  }
}

std::string emit_partition(const IntervalPartition& p) {
  std::ostringstream out;
  write_partition(out, p);
  return out.str();
}

IntervalPartition read_partition(std::istream& in) {
  std::string text;
  std::size_t line_no = 1;
  if (!std::getline(in, text)) throw PartitionParseError(line_no, "missing header");
  if (!text.empty() && text.back() == '\r') throw PartitionParseError(line_no, "CR line endings are not accepted");

  IntervalPartition p;
  {
    std::istringstream header(text);
    std::string n_tok, d_tok, regime_tok, extra;
    if (!(header >> n_tok >> d_tok >> regime_tok) || (header >> extra)) {
      throw PartitionParseError(line_no, "header must be 'n=<int> d=<int> regime=<tag>'");
    }
    p.n = header_field(n_tok, "n=", line_no);
    p.d = header_field(d_tok, "d=", line_no);
    if (p.d < 1 || p.d > p.n || p.n > kMaxMaskUniverse) {
      throw PartitionParseError(line_no, "header needs 1 <= d <= n <= 64");
    }
    if (regime_tok.rfind("regime=", 0) != 0) throw PartitionParseError(line_no, "expected 'regime=' in header");
    Regime tag{};
    try {
      tag = parse_regime(std::string_view(regime_tok).substr(7));
    } catch (const Error& e) {
      throw PartitionParseError(line_no, e.what());
    }
    p.regime = regime_of(p.n, p.d);
    if (tag != p.regime.regime) {
      throw PartitionParseError(line_no, "regime tag " + std::string(to_string(tag)) + " disagrees with n, d (" +
                                             std::string(to_string(p.regime.regime)) + ")");
    }
  }

  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') throw PartitionParseError(line_no, "CR line endings are not accepted");
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw PartitionParseError(line_no, "expected '<lower>;<upper>'");
    PosetInterval iv;
    try {
      iv.lower = parse_mask(p.n, std::string_view(text).substr(0, semi));
      iv.upper = parse_mask(p.n, std::string_view(text).substr(semi + 1));
    } catch (const Error& e) {
      throw PartitionParseError(line_no, e.what());
    }
    if (mask_to_string(iv.lower) != std::string_view(text).substr(0, semi) ||
        mask_to_string(iv.upper) != std::string_view(text).substr(semi + 1)) {
      throw PartitionParseError(line_no, "members must be listed in increasing order");
    }
    if (!iv.well_formed()) throw PartitionParseError(line_no, "lower endpoint is not inside upper endpoint");
    p.intervals.push_back(iv);
  }
  return p;
}

IntervalPartition parse_partition(const std::string& text) {
  std::istringstream in(text);
  return read_partition(in);
}

bool same_partition(const IntervalPartition& a, const IntervalPartition& b) {
  return a.n == b.n && a.d == b.d && a.regime == b.regime && a.implicit_trivial == b.implicit_trivial &&
         a.intervals == b.intervals;
}

}  // namespace sdepth
