#include "whp/element.hpp"

#include "whp/error.hpp"

#include <cctype>
#include <vector>

namespace whp {

GroupElement GroupElement::identity(int m, int n) {
  return {IntVector::Zero(m), FreeWord(n)};
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  if (g.m() != h.m() || g.n() != h.n())
    throw RankError("element ranks differ: (" + std::to_string(g.m()) + "," + std::to_string(g.n()) +
                    ") vs (" + std::to_string(h.m()) + "," + std::to_string(h.n()) + ")");
  return {g.abelian + h.abelian, g.free * h.free};
}

GroupElement invert(const GroupElement& g) { return {-g.abelian, g.free.inverse()}; }

std::string to_string(const GroupElement& g) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < g.abelian.size(); ++i) {
    if (i) out += ',';
    out += g.abelian(i).get_str();
  }
  out += "; ";
  out += g.free.str();
  out += ')';
  return out;
}

GroupElement parse_element(std::string_view text, int m, int n) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };

  expect('(');
  std::vector<Integer> entries;
  skip_ws();
  if (i < text.size() && text[i] != ';') {
    while (true) {
      skip_ws();
      const std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      const std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw ParseError("expected integer", start);
      std::string token(text.substr(start, i - start));
      if (token.front() == '+') token.erase(0, 1);
      entries.emplace_back(token);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
  }
  const std::size_t semicolon = i;
  expect(';');
  if (static_cast<int>(entries.size()) != m)
    throw RankError("expected " + std::to_string(m) + " abelian entries, got " +
                    std::to_string(entries.size()) + " (position " + std::to_string(semicolon) + ")");

  const std::size_t close = text.rfind(')');
  if (close == std::string_view::npos || close < i) throw ParseError("expected ')'", text.size());
  for (std::size_t k = close + 1; k < text.size(); ++k)
    if (!std::isspace(static_cast<unsigned char>(text[k])))
      throw ParseError("unexpected input after ')'", k);

  GroupElement g;
  g.abelian = IntVector(m);
  for (int k = 0; k < m; ++k) g.abelian(k) = entries[static_cast<std::size_t>(k)];
  g.free = parse_word(text.substr(i, close - i), n, i);
  return g;
}

}  // namespace whp
