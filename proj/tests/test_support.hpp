#pragma once

#include "whp/element.hpp"
#include "whp/word.hpp"

#include <random>
#include <string>
#include <vector>

namespace whp::testing {

inline FreeWord W(const std::string& text, int n = 2) { return parse_word(text, n); }

inline GroupElement E(const std::string& text, int m = 1, int n = 2) { return parse_element(text, m, n); }

inline IntVector V(std::initializer_list<long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

inline IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMatrix out(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) out(i, j++) = x;
    ++i;
  }
  return out;
}

/// Raw (possibly unreduced) letter sequence.
inline std::vector<Letter> random_raw(std::mt19937& rng, int n, int max_len) {
  if (n == 0) return {};
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n), sign(0, 1);
  std::vector<Letter> out(static_cast<std::size_t>(len(rng)));
  for (Letter& l : out) l = gen(rng) * (sign(rng) ? -1 : 1);
  return out;
}

/// Reduced word of length <= max_len.
inline FreeWord random_word(std::mt19937& rng, int n, int max_len) {
  if (n == 0) return FreeWord(0);
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n), sign(0, 1);
  std::vector<Letter> out;
  const int target = len(rng);
  while (static_cast<int>(out.size()) < target) {
    const Letter l = gen(rng) * (sign(rng) ? -1 : 1);
    if (!out.empty() && out.back() == -l) continue;
    out.push_back(l);
  }
  return FreeWord(std::span<const Letter>(out), n);
}

inline IntVector random_vector(std::mt19937& rng, int len, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntVector v(len);
  for (int i = 0; i < len; ++i) v(i) = d(rng);
  return v;
}

inline IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix q(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) q(i, j) = d(rng);
  return q;
}

inline GroupElement random_element(std::mt19937& rng, int m, int n, int entry, int max_len) {
  return {random_vector(rng, m, entry), random_word(rng, n, max_len)};
}

}  // namespace whp::testing
