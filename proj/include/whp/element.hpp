#pragma once

#include "whp/integer.hpp"
#include "whp/word.hpp"

#include <string>
#include <string_view>

namespace whp {

/// Element (a, u) of Z^m x F_n.
struct GroupElement {
  IntVector abelian;
  FreeWord free;

  int m() const { return static_cast<int>(abelian.size()); }
  int n() const { return free.rank(); }

  static GroupElement identity(int m, int n);

  friend bool operator==(const GroupElement& g, const GroupElement& h) {
    return same(g.abelian, h.abelian) && g.free == h.free;
  }
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);

/// "(2,-1; x1 X2^2)"; "(; x1)" when m = 0.
std::string to_string(const GroupElement& g);

/// Inverse of to_string, whitespace tolerant. Throws ParseError (with position) on
/// syntax errors and RankError on rank mismatches.
GroupElement parse_element(std::string_view text, int m, int n);

}  // namespace whp
