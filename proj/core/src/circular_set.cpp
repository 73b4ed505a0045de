#include "sdepth/circular_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "sdepth/error.hpp"

namespace sdepth {

namespace {

std::size_t word_count(int universe) { return static_cast<std::size_t>((universe + 63) / 64); }

std::vector<int> parse_members(int universe, std::string_view text) {
  std::vector<int> out;
  if (text.empty()) fail(ErrorKind::Parse, "empty member list");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      fail(ErrorKind::Parse, "malformed member '" + std::string(token) + "'");
    }
    if (value < 1 || value > universe) {
      fail(ErrorKind::Parse, "member " + std::to_string(value) + " outside [1," + std::to_string(universe) + "]");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  std::vector<int> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorKind::Parse, "duplicate member in '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace

CircularSet::CircularSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
  require(universe >= 1, ErrorKind::InvalidArgument, "universe must be positive");
}

CircularSet::CircularSet(int universe, std::initializer_list<int> members)
    : CircularSet(universe, std::span<const int>(members.begin(), members.size())) {}

CircularSet::CircularSet(int universe, std::span<const int> members) : CircularSet(universe) {
  for (int m : members) {
    check_element(m);
    if (contains(m)) fail(ErrorKind::InvalidArgument, "duplicate member " + std::to_string(m));
    insert(m);
  }
}

CircularSet CircularSet::from_mask(int universe, SubsetMask mask) {
  require(universe <= kMaxMaskUniverse, ErrorKind::InvalidArgument, "mask universe exceeds 64");
  require((mask & ~full_mask(universe)) == 0, ErrorKind::InvalidArgument, "mask has members outside the universe");
  CircularSet s(universe);
  s.words_[0] = mask;
  return s;
}

CircularSet CircularSet::parse(int universe, std::string_view text) {
  const auto members = parse_members(universe, text);
  return CircularSet(universe, std::span<const int>(members));
}

int CircularSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool CircularSet::contains(int element) const noexcept {
  if (element < 1 || element > universe_) return false;
  const int i = element - 1;
  return (words_[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1U;
}

void CircularSet::insert(int element) {
  check_element(element);
  const int i = element - 1;
  words_[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64);
}

void CircularSet::erase(int element) {
  check_element(element);
  const int i = element - 1;
  words_[static_cast<std::size_t>(i / 64)] &= ~(std::uint64_t{1} << (i % 64));
}

std::vector<int> CircularSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t rest = words_[w]; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(rest) + 1);
    }
  }
  return out;
}

int CircularSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]) + 1;
  }
  fail(ErrorKind::EmptySet, "first() on an empty set");
}

SubsetMask CircularSet::to_mask() const {
  require(universe_ <= kMaxMaskUniverse, ErrorKind::InvalidArgument, "set universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

bool CircularSet::is_subset_of(const CircularSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

CircularSet CircularSet::restricted_to(int new_universe) const {
  CircularSet out(new_universe);
  for (int m : members()) {
    if (m <= new_universe) out.insert(m);
  }
  return out;
}

CircularSet CircularSet::embedded_in(int new_universe) const {
  require(new_universe >= universe_, ErrorKind::InvalidArgument, "embedding into a smaller universe");
  CircularSet out(new_universe);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  return out;
}

CircularSet CircularSet::rotated(int shift) const {
  CircularSet out(universe_);
  const int t = ((shift % universe_) + universe_) % universe_;
  for (int m : members()) out.insert((m - 1 + t) % universe_ + 1);
  return out;
}

std::string CircularSet::to_string() const {
  std::string out;
  for (int m : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(m);
  }
  return out;
}

CircularSet operator|(const CircularSet& a, const CircularSet& b) {
  a.check_same_universe(b);
  CircularSet out = a;
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] |= b.words_[w];
  return out;
}

CircularSet operator&(const CircularSet& a, const CircularSet& b) {
  a.check_same_universe(b);
  CircularSet out = a;
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] &= b.words_[w];
  return out;
}

void CircularSet::check_element(int element) const {
  if (element < 1 || element > universe_) {
    fail(ErrorKind::InvalidArgument,
         "element " + std::to_string(element) + " outside [1," + std::to_string(universe_) + "]");
  }
}

void CircularSet::check_same_universe(const CircularSet& other) const {
  if (universe_ != other.universe_) {
    fail(ErrorKind::UniverseMismatch, "universes " + std::to_string(universe_) + " and " +
                                          std::to_string(other.universe_) + " differ");
  }
}

bool CircularBlock::contains(int element) const noexcept {
  if (element < 1 || element > universe || length == 0) return false;
  const int offset = ((element - start) % universe + universe) % universe;
  return offset < length;
}

CircularSet CircularBlock::elements() const {
  CircularSet out(universe);
  for (int i = 0; i < length; ++i) out.insert(at(i));
  return out;
}

std::string mask_to_string(SubsetMask mask) {
  std::string out;
  for (SubsetMask rest = mask; rest != 0; rest &= rest - 1) {
    if (!out.empty()) out += ',';
    out += std::to_string(std::countr_zero(rest) + 1);
  }
  return out;
}

SubsetMask parse_mask(int universe, std::string_view text) {
  require(universe <= kMaxMaskUniverse, ErrorKind::InvalidArgument, "mask universe exceeds 64");
  SubsetMask mask = 0;
  for (int m : parse_members(universe, text)) mask |= element_bit(m);
  return mask;
}

}  // namespace sdepth
