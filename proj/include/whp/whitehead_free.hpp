#pragma once

#include "whp/word.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace whp {

/// x_i -> x_{image[i-1]}^{sign[i-1]}.
struct SignedPermutation {
  std::vector<int> image;
  std::vector<int> sign;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Whitehead multiplier (A, a): fixes a^{+-1}; a letter y with y in A and y^-1 not
/// in A goes to y a, with only y^-1 in A to a^-1 y, with both to a^-1 y a.
/// `set` is sorted by letter_key, contains `multiplier` and not its inverse.
struct Multiplier {
  Letter multiplier;
  std::vector<Letter> set;
  friend bool operator==(const Multiplier&, const Multiplier&) = default;
};

/// Elementary (Whitehead) automorphism of F_n.
class WhiteheadAut {
 public:
  WhiteheadAut(SignedPermutation p, int rank);
  WhiteheadAut(Multiplier m, int rank);

  int rank() const { return rank_; }
  bool is_permutation() const { return std::holds_alternative<SignedPermutation>(data_); }
  const SignedPermutation& permutation() const { return std::get<SignedPermutation>(data_); }
  const Multiplier& multiplier() const { return std::get<Multiplier>(data_); }

  /// Images of x_1..x_n.
  const FreeImages& images() const { return images_; }
  WhiteheadAut inverse() const;
  std::string str() const;

  friend bool operator==(const WhiteheadAut& a, const WhiteheadAut& b) {
    return a.rank_ == b.rank_ && a.data_ == b.data_;
  }

 private:
  int rank_;
  std::variant<SignedPermutation, Multiplier> data_;
  FreeImages images_;
};

/// All 2^n n! signed permutations (identity first), then every nontrivial
/// multiplier (A, a), a in x1, X1, x2, ..., A in subset order. Cached per rank.
const std::vector<WhiteheadAut>& enumerate_whitehead_auts(int rank);

FreeWord apply_aut(const WhiteheadAut& t, const FreeWord& w);

/// Cyclically reduced word stored as its least rotation under letter_key.
class CyclicWord {
 public:
  explicit CyclicWord(const FreeWord& w);
  const FreeWord& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend bool operator<(const CyclicWord& a, const CyclicWord& b) {
    return shortlex_less(a.word_, b.word_);
  }

 private:
  FreeWord word_;
};

struct Minimization {
  CyclicWord min;
  std::vector<WhiteheadAut> trace;
};

/// Greedy peak reduction: applies the first strictly length-decreasing Whitehead
/// automorphism to the cyclic word until none exists.
Minimization minimize_cyclic(const FreeWord& w);

/// Generator images of an automorphism phi with u phi == v exactly, if one exists.
std::optional<FreeImages> aut_equivalent(const FreeWord& u, const FreeWord& v);

struct Primitivity {
  bool primitive;
  /// When primitive: an automorphism sending w to x1.
  std::optional<FreeImages> witness;
};

/// Throws std::invalid_argument on the trivial word.
Primitivity is_primitive(const FreeWord& w);

}  // namespace whp
