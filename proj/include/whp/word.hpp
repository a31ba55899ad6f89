#pragma once

#include "whp/integer.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace whp {

/// Signed generator index: +i is x_i, -i is x_i^{-1}.
using Letter = int;

/// Position of a letter in the order x1 < X1 < x2 < X2 < ...
inline int letter_key(Letter l) { return 2 * ((l < 0 ? -l : l) - 1) + (l < 0 ? 1 : 0); }

/// Reduced word in the free group of rank n. Reduction happens at construction,
/// so every FreeWord is in normal form.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank);
  /// Reduces `raw`; throws RankError for zero or out-of-range indices.
  FreeWord(std::span<const Letter> raw, int rank);
  FreeWord(std::initializer_list<Letter> raw, int rank);

  static FreeWord generator(int index, int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  FreeWord inverse() const;
  /// w^e for any integer e; throws std::length_error if the result is absurdly long.
  FreeWord pow(long e) const;
  FreeWord pow(const Integer& e) const;
  FreeWord subword(std::size_t pos, std::size_t len) const;

  /// "x1 X2^2", or "1" for the identity.
  std::string str() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  struct Trusted {};
  FreeWord(std::vector<Letter> reduced, int rank, Trusted)
      : rank_(rank), letters_(std::move(reduced)) {}

  int rank_ = 0;
  std::vector<Letter> letters_;
};

/// Shortlex order (length first, then letter_key lexicographically).
bool shortlex_less(const FreeWord& a, const FreeWord& b);

struct ShortlexLess {
  bool operator()(const FreeWord& a, const FreeWord& b) const { return shortlex_less(a, b); }
};

FreeWord reduce_word(std::span<const Letter> raw, int rank);

/// Exponent-sum vector of w, length rank.
IntVector abelianize(const FreeWord& w);

/// w = conjugator * core * conjugator^{-1} with core cyclically reduced.
struct CyclicDecomposition {
  FreeWord core;
  FreeWord conjugator;
};
CyclicDecomposition cyclic_reduce(const FreeWord& w);

inline bool is_cyclically_reduced(const FreeWord& w) {
  return w.size() < 2 || w.front() != -w.back();
}

/// w = root^exponent with exponent maximal. Throws std::invalid_argument on the identity.
struct PrimitiveRoot {
  FreeWord root;
  long exponent;
};
PrimitiveRoot primitive_root(const FreeWord& w);

/// Exponent k with w == base^k, if w lies in the cyclic subgroup generated by a
/// nontrivial non-proper-power `base`.
std::optional<long> power_of(const FreeWord& w, const FreeWord& base);

/// Parses the word grammar: '1' | term (ws term)*, term := ('x'|'X') index ('^' int)?.
/// `offset` is added to reported error positions.
FreeWord parse_word(std::string_view text, int rank, std::size_t offset = 0);

/// Images of x_1..x_n under an endomorphism of F_n.
using FreeImages = std::vector<FreeWord>;

FreeImages identity_images(int rank);
FreeImages trivial_images(int rank);
/// The image of w under x_i -> images[i-1]. Images may live in a different rank.
FreeWord apply_images(std::span<const FreeWord> images, const FreeWord& w);
/// Right-action composition: `first` acts, then `second`.
FreeImages compose_images(std::span<const FreeWord> first, std::span<const FreeWord> second);
std::string to_string(std::span<const FreeWord> images);

}  // namespace whp
