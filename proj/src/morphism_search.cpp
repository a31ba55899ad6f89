#include "whp/morphism_search.hpp"

#include "whp/error.hpp"
#include "whp/stallings.hpp"
#include "whp/whitehead_free.hpp"

#include <algorithm>
#include <functional>

namespace whp {

namespace {

// Reduced words of length <= max_len grouped by length, each group in shortlex order.
std::vector<std::vector<FreeWord>> words_by_length(int rank, long max_len) {
  std::vector<std::vector<FreeWord>> out(static_cast<std::size_t>(max_len) + 1);
  out[0].push_back(FreeWord(rank));
  std::vector<Letter> letters;
  for (int i = 1; i <= rank; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  for (std::size_t len = 1; len < out.size(); ++len) {
    for (const FreeWord& w : out[len - 1]) {
      for (Letter l : letters) {
        if (!w.is_identity() && w.back() == -l) continue;
        std::vector<Letter> next(w.letters().begin(), w.letters().end());
        next.push_back(l);
        out[len].emplace_back(std::span<const Letter>(next), rank);
      }
    }
  }
  return out;
}

// Enumerates tuples of `slots` words (each of length <= max_len) by total length,
// then lexicographically by shortlex position, until `accept` returns true.
std::optional<std::vector<const FreeWord*>> search_tuples(
    const std::vector<std::vector<FreeWord>>& words, std::size_t slots, long max_len,
    const std::function<bool(const std::vector<const FreeWord*>&)>& accept) {
  std::vector<const FreeWord*> tuple(slots, nullptr);
  std::function<bool(std::size_t, long)> rec = [&](std::size_t pos, long remaining) -> bool {
    if (pos + 1 == slots || slots == 0) {
      if (slots == 0) return remaining == 0 && accept(tuple);
      if (remaining > max_len) return false;
      for (const FreeWord& w : words[static_cast<std::size_t>(remaining)]) {
        tuple[pos] = &w;
        if (accept(tuple)) return true;
      }
      return false;
    }
    for (long len = 0; len <= std::min(max_len, remaining); ++len) {
      for (const FreeWord& w : words[static_cast<std::size_t>(len)]) {
        tuple[pos] = &w;
        if (rec(pos + 1, remaining - len)) return true;
      }
    }
    return false;
  };
  const long max_total = max_len * static_cast<long>(slots);
  for (long total = 0; total <= max_total; ++total) {
    if (rec(0, total)) return tuple;
  }
  return std::nullopt;
}

void check_inputs(const FreeWord& u, const FreeWord& v, long bound) {
  if (u.rank() != v.rank()) throw RankError("source and target words have different ranks");
  if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
}

std::optional<Certificate> abelian_filter(const FreeWord& u, const FreeWord& v) {
  const IntVector uab = abelianize(u);
  const IntVector vab = abelianize(v);
  if (is_zero(uab)) {
    if (!is_zero(vab))
      return Certificate{Reason::AbelianVanishes, "u^ab = 0 but v^ab = " + to_string(vab)};
    return std::nullopt;
  }
  const Integer g = vec_gcd(uab);
  for (Eigen::Index i = 0; i < vab.size(); ++i) {
    if (!divides(g, vab(i)))
      return Certificate{Reason::AbelianIndivisible,
                         "gcd(u^ab) = " + g.get_str() + " does not divide v^ab entry " + vab(i).get_str()};
  }
  return std::nullopt;
}

std::optional<Certificate> power_filter(const FreeWord& u, const FreeWord& v) {
  const PrimitiveRoot ru = primitive_root(u);
  if (ru.exponent <= 1) return std::nullopt;
  if (v.is_identity() || primitive_root(v).exponent % ru.exponent != 0)
    return Certificate{Reason::PowerMismatch,
                       "u is a " + std::to_string(ru.exponent) + "-th power but v is not"};
  return std::nullopt;
}

std::vector<long> small_abelianization(const FreeWord& w) {
  std::vector<long> out(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) out[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  return out;
}

}  // namespace

long default_bound(const FreeWord& v) { return std::max<long>(2 * static_cast<long>(v.size()), 4); }

Decision<FreeImages> endo_image_decide(const FreeWord& u, const FreeWord& v, long bound) {
  check_inputs(u, v, bound);
  const int n = u.rank();
  if (v.is_identity()) return Yes<FreeImages>{trivial_images(n)};
  if (u.is_identity()) return no_because(Reason::TrivialSource, "u = 1 but v != 1");
  if (auto c = abelian_filter(u, v)) return No{{*c}};
  if (auto c = power_filter(u, v)) return No{{*c}};

  if (Primitivity p = is_primitive(u); p.primitive) {
    FreeImages rho = trivial_images(n);
    rho[0] = v;
    return Yes<FreeImages>{compose_images(*p.witness, rho)};
  }

  // Only generators occurring in u influence u phi.
  std::vector<int> occurring;
  for (int i = 1; i <= n; ++i) {
    if (std::any_of(u.letters().begin(), u.letters().end(), [i](Letter l) { return std::abs(l) == i; }))
      occurring.push_back(i);
  }
  const auto words = words_by_length(n, bound);
  const IntVector uab = abelianize(u);
  const std::vector<long> vab = small_abelianization(v);
  std::vector<long> uab_small;
  for (Eigen::Index i = 0; i < uab.size(); ++i) uab_small.push_back(uab(i).get_si());

  FreeImages phi = trivial_images(n);
  auto accept = [&](const std::vector<const FreeWord*>& tuple) {
    // Cheap necessary condition v^ab = u^ab * M_phi before applying.
    std::vector<long> image_ab(static_cast<std::size_t>(n), 0);
    for (std::size_t s = 0; s < tuple.size(); ++s) {
      const long coeff = uab_small[static_cast<std::size_t>(occurring[s] - 1)];
      if (coeff == 0) continue;
      for (Letter l : tuple[s]->letters()) image_ab[static_cast<std::size_t>(std::abs(l) - 1)] += coeff * (l > 0 ? 1 : -1);
    }
    if (image_ab != vab) return false;
    for (std::size_t s = 0; s < tuple.size(); ++s) phi[static_cast<std::size_t>(occurring[s] - 1)] = *tuple[s];
    return apply_images(phi, u) == v;
  };
  if (search_tuples(words, occurring.size(), bound, accept)) return Yes<FreeImages>{phi};
  return Unknown{bound, "no endomorphism with image lengths <= " + std::to_string(bound) +
                            " found"};
}

Decision<FreeImages> mono_image_decide(const FreeWord& u, const FreeWord& v, long bound) {
  check_inputs(u, v, bound);
  const int n = u.rank();
  if (u.is_identity() != v.is_identity())
    return no_because(Reason::TrivialityMismatch, "an injective map sends only 1 to 1");
  if (u.is_identity()) return Yes<FreeImages>{identity_images(n)};
  if (auto c = abelian_filter(u, v)) return No{{*c}};
  if (auto c = power_filter(u, v)) return No{{*c}};

  const auto words = words_by_length(n, bound);
  FreeImages phi(static_cast<std::size_t>(n), FreeWord(n));
  auto accept = [&](const std::vector<const FreeWord*>& tuple) {
    for (std::size_t s = 0; s < tuple.size(); ++s) phi[s] = *tuple[s];
    return apply_images(phi, u) == v && is_injective_endo(phi, n);
  };
  if (search_tuples(words, static_cast<std::size_t>(n), bound, accept)) return Yes<FreeImages>{phi};
  return Unknown{bound, "no monomorphism with image lengths <= " + std::to_string(bound) +
                            " found"};
}

bool check_certificate(const Certificate& c, const FreeWord& u, const FreeWord& v) {
  switch (c.code) {
    case Reason::TrivialSource:
      return u.is_identity() && !v.is_identity();
    case Reason::TrivialityMismatch:
      return u.is_identity() != v.is_identity();
    case Reason::AbelianVanishes:
      return is_zero(abelianize(u)) && !is_zero(abelianize(v));
    case Reason::AbelianIndivisible: {
      const IntVector uab = abelianize(u), vab = abelianize(v);
      if (is_zero(uab)) return false;
      const Integer g = vec_gcd(uab);
      for (Eigen::Index i = 0; i < vab.size(); ++i)
        if (!divides(g, vab(i))) return true;
      return false;
    }
    case Reason::PowerMismatch: {
      if (u.is_identity()) return false;
      const long k = primitive_root(u).exponent;
      return k > 1 && (v.is_identity() || primitive_root(v).exponent % k != 0);
    }
    default:
      return false;
  }
}

}  // namespace whp
