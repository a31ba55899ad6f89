#include "whp/word.hpp"

#include "whp/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace whp {

namespace {

constexpr std::size_t kMaxWordLength = std::size_t{1} << 28;

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l)
    out.pop_back();
  else
    out.push_back(l);
}

void check_rank(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank())
    throw RankError("word rank mismatch: " + std::to_string(a.rank()) + " vs " +
                    std::to_string(b.rank()));
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 0) throw RankError("negative rank");
}

FreeWord::FreeWord(std::span<const Letter> raw, int rank) : rank_(rank) {
  if (rank < 0) throw RankError("negative rank");
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0 || l > rank || l < -rank)
      throw RankError("generator index " + std::to_string(l) + " out of range for rank " +
                      std::to_string(rank));
    push_reduced(letters_, l);
  }
}

FreeWord::FreeWord(std::initializer_list<Letter> raw, int rank)
    : FreeWord(std::span<const Letter>(raw.begin(), raw.size()), rank) {}

FreeWord FreeWord::generator(int index, int rank) { return FreeWord({index}, rank); }

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = -l;
  return FreeWord(std::move(out), rank_, Trusted{});
}

FreeWord FreeWord::pow(long e) const {
  if (e == 0 || letters_.empty()) return FreeWord(rank_);
  if (e < 0) return inverse().pow(-e);
  auto [core, conj] = cyclic_reduce(*this);
  const auto reps = static_cast<unsigned long>(e);
  if (core.size() > 0 && reps > kMaxWordLength / core.size())
    throw std::length_error("word power too long");
  std::vector<Letter> out;
  out.reserve(conj.size() * 2 + core.size() * reps);
  out.insert(out.end(), conj.letters_.begin(), conj.letters_.end());
  for (unsigned long i = 0; i < reps; ++i)
    out.insert(out.end(), core.letters_.begin(), core.letters_.end());
  FreeWord ci = conj.inverse();
  out.insert(out.end(), ci.letters_.begin(), ci.letters_.end());
  return FreeWord(std::move(out), rank_, Trusted{});
}

FreeWord FreeWord::pow(const Integer& e) const {
  if (letters_.empty()) return *this;
  auto small = to_long(e);
  if (!small) throw std::length_error("word exponent " + e.get_str() + " too large");
  return pow(*small);
}

FreeWord FreeWord::subword(std::size_t pos, std::size_t len) const {
  std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                          letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return FreeWord(std::span<const Letter>(out), rank_);
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const Letter l = letters_[i];
    if (!first) os << ' ';
    first = false;
    os << (l > 0 ? 'x' : 'X') << (l > 0 ? l : -l);
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  check_rank(a, b);
  std::vector<Letter> out = a.letters_;
  for (Letter l : b.letters_) push_reduced(out, l);
  return FreeWord(std::move(out), a.rank_, FreeWord::Trusted{});
}

bool shortlex_less(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_key(a[i]) < letter_key(b[i]);
  }
  return false;
}

FreeWord reduce_word(std::span<const Letter> raw, int rank) { return FreeWord(raw, rank); }

IntVector abelianize(const FreeWord& w) {
  std::vector<long> counts(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) counts[static_cast<std::size_t>((l > 0 ? l : -l) - 1)] += (l > 0 ? 1 : -1);
  IntVector v(w.rank());
  for (int i = 0; i < w.rank(); ++i) v(i) = counts[static_cast<std::size_t>(i)];
  return v;
}

CyclicDecomposition cyclic_reduce(const FreeWord& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return {w.subword(lo, hi - lo), w.subword(0, lo)};
}

PrimitiveRoot primitive_root(const FreeWord& w) {
  if (w.is_identity()) throw std::invalid_argument("primitive_root of the trivial word");
  auto [core, conj] = cyclic_reduce(w);
  const std::size_t len = core.size();
  for (std::size_t d = 1; d <= len; ++d) {
    if (len % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) periodic = core[i] == core[i - d];
    if (periodic) {
      FreeWord root = conj * core.subword(0, d) * conj.inverse();
      return {root, static_cast<long>(len / d)};
    }
  }
  return {w, 1};  // unreachable: d == len always succeeds
}

std::optional<long> power_of(const FreeWord& w, const FreeWord& base) {
  if (w.is_identity()) return 0;
  auto [root, e] = primitive_root(w);
  if (root == base) return e;
  if (root == base.inverse()) return -e;
  return std::nullopt;
}

FreeWord parse_word(std::string_view text, int rank, std::size_t offset) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, offset + i); };
  auto read_int = [&](bool allow_sign) -> long {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) {
      i = start;
      throw fail("expected integer");
    }
    try {
      return std::stol(std::string(text.substr(start, i - start)));
    } catch (const std::out_of_range&) {
      i = start;
      throw fail("integer out of range");
    }
  };

  skip_ws();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size()) throw fail("unexpected input after trivial word");
    return FreeWord(rank);
  }
  if (i == text.size()) throw fail("expected word");
  std::vector<Letter> raw;
  while (i < text.size()) {
    const char c = text[i];
    if (c != 'x' && c != 'X') throw fail("expected generator 'x' or 'X'");
    ++i;
    const std::size_t index_pos = i;
    const long index = read_int(false);
    if (index < 1 || index > rank)
      throw RankError("generator index " + std::to_string(index) + " out of range for rank " +
                      std::to_string(rank) + " at position " + std::to_string(offset + index_pos));
    long exponent = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      exponent = read_int(true);
      if (exponent == 0) throw fail("zero exponent");
    }
    const Letter l = static_cast<Letter>(c == 'x' ? index : -index);
    const long reps = exponent < 0 ? -exponent : exponent;
    if (static_cast<std::size_t>(reps) > kMaxWordLength) throw fail("exponent too large");
    for (long k = 0; k < reps; ++k) raw.push_back(exponent > 0 ? l : -l);
    skip_ws();
  }
  return FreeWord(std::span<const Letter>(raw), rank);
}

FreeImages identity_images(int rank) {
  FreeImages out;
  for (int i = 1; i <= rank; ++i) out.push_back(FreeWord::generator(i, rank));
  return out;
}

FreeImages trivial_images(int rank) { return FreeImages(static_cast<std::size_t>(rank), FreeWord(rank)); }

FreeWord apply_images(std::span<const FreeWord> images, const FreeWord& w) {
  if (static_cast<int>(images.size()) != w.rank())
    throw RankError("image count " + std::to_string(images.size()) + " does not match rank " +
                    std::to_string(w.rank()));
  const int target_rank = images.empty() ? 0 : images.front().rank();
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const FreeWord& img = images[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
    if (l > 0) {
      for (Letter x : img.letters()) push_reduced(out, x);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) push_reduced(out, -*it);
    }
  }
  return FreeWord(std::span<const Letter>(out), target_rank);
}

FreeImages compose_images(std::span<const FreeWord> first, std::span<const FreeWord> second) {
  FreeImages out;
  out.reserve(first.size());
  for (const FreeWord& w : first) out.push_back(apply_images(second, w));
  return out;
}

std::string to_string(std::span<const FreeWord> images) {
  std::ostringstream os;
  for (std::size_t i = 0; i < images.size(); ++i)
    os << (i ? ", " : "") << 'x' << (i + 1) << " -> " << images[i].str();
  return os.str();
}

}  // namespace whp
