#include "whp/whitehead_free.hpp"

#include "whp/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace whp {

namespace {

FreeImages permutation_images(const SignedPermutation& p, int rank) {
  FreeImages out;
  for (int i = 0; i < rank; ++i)
    out.push_back(FreeWord::generator(p.image[static_cast<std::size_t>(i)] * p.sign[static_cast<std::size_t>(i)], rank));
  return out;
}

FreeImages multiplier_images(const Multiplier& m, int rank) {
  auto in_set = [&](Letter y) { return std::find(m.set.begin(), m.set.end(), y) != m.set.end(); };
  const FreeWord a = FreeWord::generator(m.multiplier, rank);
  const FreeWord a_inv = a.inverse();
  FreeImages out;
  for (int j = 1; j <= rank; ++j) {
    FreeWord y = FreeWord::generator(j, rank);
    if (j == m.multiplier || j == -m.multiplier) {
      out.push_back(y);
      continue;
    }
    const bool pos = in_set(j), neg = in_set(-j);
    if (pos && neg)
      out.push_back(a_inv * y * a);
    else if (pos)
      out.push_back(y * a);
    else if (neg)
      out.push_back(a_inv * y);
    else
      out.push_back(y);
  }
  return out;
}

void sort_letters(std::vector<Letter>& letters) {
  std::sort(letters.begin(), letters.end(),
            [](Letter a, Letter b) { return letter_key(a) < letter_key(b); });
}

}  // namespace

WhiteheadAut::WhiteheadAut(SignedPermutation p, int rank) : rank_(rank) {
  if (static_cast<int>(p.image.size()) != rank || static_cast<int>(p.sign.size()) != rank)
    throw RankError("permutation size does not match rank");
  std::vector<int> seen(static_cast<std::size_t>(rank), 0);
  for (int i = 0; i < rank; ++i) {
    const int t = p.image[static_cast<std::size_t>(i)];
    const int s = p.sign[static_cast<std::size_t>(i)];
    if (t < 1 || t > rank || seen[static_cast<std::size_t>(t - 1)]++ || (s != 1 && s != -1))
      throw std::invalid_argument("not a signed permutation");
  }
  images_ = permutation_images(p, rank);
  data_ = std::move(p);
}

WhiteheadAut::WhiteheadAut(Multiplier m, int rank) : rank_(rank) {
  const Letter a = m.multiplier;
  if (a == 0 || a > rank || a < -rank) throw RankError("multiplier letter out of range");
  sort_letters(m.set);
  if (std::adjacent_find(m.set.begin(), m.set.end()) != m.set.end())
    throw std::invalid_argument("multiplier set has repeated letters");
  for (Letter y : m.set)
    if (y == 0 || y > rank || y < -rank) throw RankError("multiplier set letter out of range");
  const bool has_a = std::find(m.set.begin(), m.set.end(), a) != m.set.end();
  const bool has_inv = std::find(m.set.begin(), m.set.end(), -a) != m.set.end();
  if (!has_a || has_inv) throw std::invalid_argument("multiplier set must contain a and not a^-1");
  images_ = multiplier_images(m, rank);
  data_ = std::move(m);
}

WhiteheadAut WhiteheadAut::inverse() const {
  if (is_permutation()) {
    const SignedPermutation& p = permutation();
    SignedPermutation inv{std::vector<int>(p.image.size()), std::vector<int>(p.sign.size())};
    for (std::size_t i = 0; i < p.image.size(); ++i) {
      const auto t = static_cast<std::size_t>(p.image[i] - 1);
      inv.image[t] = static_cast<int>(i) + 1;
      inv.sign[t] = p.sign[i];
    }
    return WhiteheadAut(std::move(inv), rank_);
  }
  const Multiplier& m = multiplier();
  Multiplier inv{-m.multiplier, {}};
  for (Letter y : m.set) inv.set.push_back(y == m.multiplier ? -y : y);
  return WhiteheadAut(std::move(inv), rank_);
}

std::string WhiteheadAut::str() const {
  std::ostringstream os;
  auto letter = [&](Letter l) { return FreeWord::generator(l, rank_).str(); };
  if (is_permutation()) {
    os << "perm(";
    for (std::size_t i = 0; i < permutation().image.size(); ++i)
      os << (i ? " " : "") << letter(permutation().image[i] * permutation().sign[i]);
    os << ')';
  } else {
    os << "mult(" << letter(multiplier().multiplier) << "; {";
    for (std::size_t i = 0; i < multiplier().set.size(); ++i)
      os << (i ? "," : "") << letter(multiplier().set[i]);
    os << "})";
  }
  return os.str();
}

const std::vector<WhiteheadAut>& enumerate_whitehead_auts(int rank) {
  static std::mutex mutex;
  static std::map<int, std::vector<WhiteheadAut>> cache;
  if (rank < 1) throw RankError("Whitehead automorphisms need rank >= 1");
  std::lock_guard lock(mutex);
  if (auto it = cache.find(rank); it != cache.end()) return it->second;

  std::vector<WhiteheadAut> out;
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      SignedPermutation p{perm, std::vector<int>(static_cast<std::size_t>(rank), 1)};
      for (int i = 0; i < rank; ++i)
        if (mask & (1u << i)) p.sign[static_cast<std::size_t>(i)] = -1;
      out.emplace_back(std::move(p), rank);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Letter> letters;
  for (int i = 1; i <= rank; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  for (Letter a : letters) {
    std::vector<Letter> others;
    for (Letter y : letters)
      if (y != a && y != -a) others.push_back(y);
    for (unsigned mask = 1; mask < (1u << others.size()); ++mask) {
      Multiplier m{a, {a}};
      for (std::size_t i = 0; i < others.size(); ++i)
        if (mask & (1u << i)) m.set.push_back(others[i]);
      out.emplace_back(std::move(m), rank);
    }
  }
  return cache.emplace(rank, std::move(out)).first->second;
}

FreeWord apply_aut(const WhiteheadAut& t, const FreeWord& w) {
  if (t.rank() != w.rank()) throw RankError("automorphism rank does not match word rank");
  return apply_images(t.images(), w);
}

CyclicWord::CyclicWord(const FreeWord& w) {
  const FreeWord core = cyclic_reduce(w).core;
  const std::size_t len = core.size();
  std::size_t best = 0;
  auto at = [&](std::size_t start, std::size_t i) { return letter_key(core[(start + i) % len]); };
  for (std::size_t s = 1; s < len; ++s) {
    for (std::size_t i = 0; i < len; ++i) {
      if (at(s, i) != at(best, i)) {
        if (at(s, i) < at(best, i)) best = s;
        break;
      }
    }
  }
  std::vector<Letter> rotated;
  for (std::size_t i = 0; i < len; ++i) rotated.push_back(core[(best + i) % len]);
  word_ = FreeWord(std::span<const Letter>(rotated), w.rank());
}

Minimization minimize_cyclic(const FreeWord& w) {
  FreeWord current = cyclic_reduce(w).core;
  std::vector<WhiteheadAut> trace;
  if (w.rank() >= 1) {
    const auto& auts = enumerate_whitehead_auts(w.rank());
    bool improved = true;
    while (improved && current.size() > 1) {
      improved = false;
      for (const WhiteheadAut& t : auts) {
        if (t.is_permutation()) continue;  // length preserving
        FreeWord next = cyclic_reduce(apply_aut(t, current)).core;
        if (next.size() < current.size()) {
          current = std::move(next);
          trace.push_back(t);
          improved = true;
          break;
        }
      }
    }
  }
  return {CyclicWord(current), std::move(trace)};
}

std::optional<FreeImages> aut_equivalent(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw RankError("aut_equivalent: rank mismatch");
  const int rank = u.rank();
  if (u.is_identity() || v.is_identity()) {
    if (u.is_identity() && v.is_identity()) return identity_images(rank);
    return std::nullopt;
  }
  const Minimization mu = minimize_cyclic(u);
  const Minimization mv = minimize_cyclic(v);
  if (mu.min.size() != mv.min.size()) return std::nullopt;

  // Breadth-first search among minimal cyclic words through length-preserving moves.
  const auto& auts = enumerate_whitehead_auts(rank);
  std::map<CyclicWord, std::pair<CyclicWord, std::size_t>> parent;
  parent.emplace(mu.min, std::make_pair(mu.min, auts.size()));
  std::deque<CyclicWord> queue{mu.min};
  bool found = mu.min == mv.min;
  while (!queue.empty() && !found) {
    CyclicWord node = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < auts.size() && !found; ++i) {
      CyclicWord next(apply_aut(auts[i], node.word()));
      if (next.size() != node.size()) continue;
      if (parent.emplace(next, std::make_pair(node, i)).second) {
        if (next == mv.min) found = true;
        queue.push_back(next);
      }
    }
  }
  if (!found) return std::nullopt;

  std::vector<std::size_t> path;
  for (CyclicWord c = mv.min; !(c == mu.min);) {
    const auto& [prev, idx] = parent.at(c);
    path.push_back(idx);
    c = prev;
  }
  std::reverse(path.begin(), path.end());

  FreeImages phi = identity_images(rank);
  for (const WhiteheadAut& t : mu.trace) phi = compose_images(phi, t.images());
  for (std::size_t idx : path) phi = compose_images(phi, auts[idx].images());
  for (auto it = mv.trace.rbegin(); it != mv.trace.rend(); ++it)
    phi = compose_images(phi, it->inverse().images());

  // u phi is now conjugate to v; fix it up to equality by an inner automorphism.
  const FreeWord x = apply_images(phi, u);
  const auto [kx, cx] = cyclic_reduce(x);
  const auto [kv, cv] = cyclic_reduce(v);
  std::optional<std::size_t> offset;
  for (std::size_t i = 0; i < kx.size() && !offset; ++i) {
    if (kx.subword(i, kx.size() - i) * kx.subword(0, i) == kv) offset = i;
  }
  if (!offset) throw InternalDefect("aut_equivalent: composed automorphism misses the conjugacy class");
  const FreeWord c = cx * kx.subword(0, *offset) * cv.inverse();
  const FreeWord c_inv = c.inverse();
  for (FreeWord& img : phi) img = c_inv * img * c;
  if (!(apply_images(phi, u) == v)) throw InternalDefect("aut_equivalent: witness does not verify");
  return phi;
}

Primitivity is_primitive(const FreeWord& w) {
  if (w.is_identity()) throw std::invalid_argument("is_primitive of the trivial word");
  if (minimize_cyclic(w).min.size() != 1) return {false, std::nullopt};
  return {true, aut_equivalent(w, FreeWord::generator(1, w.rank()))};
}

}  // namespace whp
