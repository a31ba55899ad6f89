#include "whp/decider.hpp"

#include "whp/error.hpp"
#include "whp/morphism_search.hpp"
#include "whp/whitehead_free.hpp"

namespace whp {

namespace {

bool family_holds(const Endomorphism& e, Family family) {
  if (family == Family::Endo) return true;
  if (e.n() <= 1) {
    const Integer det = determinant(abelian_matrix(e));
    return family == Family::Mono ? det != 0 : (det == 1 || det == -1);
  }
  const Classification c = classify(e);
  return family == Family::Mono ? c.is_mono : c.is_auto;
}

EndoDecision checked(const WhiteheadQuery& q, Endomorphism e) {
  if (!verify(e, q.source, q.target, q.family))
    throw InternalDefect("decide: assembled witness does not verify: " + describe(e));
  return Yes<Endomorphism>{std::move(e)};
}

// Z^m x F_n with n <= 1 is free abelian of rank m + n.
IntVector flatten(const GroupElement& g) {
  IntVector out(g.m() + g.n());
  for (int i = 0; i < g.m(); ++i) out(i) = g.abelian(i);
  if (g.n() == 1) out(g.m()) = abelianize(g.free)(0);
  return out;
}

EndoDecision decide_low_rank(const WhiteheadQuery& q) {
  const int m = q.source.m(), n = q.source.n();
  const IntVector a = flatten(q.source), b = flatten(q.target);
  if (m + n == 0) return checked(q, Endomorphism::identity(0, 0));
  auto mat = pure_abelian_whitehead(a, b, q.family);
  if (!mat)
    return no_because(Reason::RankSplit, "no " + std::string(family_name(q.family)) + " matrix of Z^" +
                                             std::to_string(m + n) + " sends " + to_string(a) + " to " +
                                             to_string(b));
  return checked(q, endo_from_abelian_matrix(*mat, m, n));
}

EndoDecision from_free(const WhiteheadQuery& q, const Decision<FreeImages>& free, const AbelianWitness& ab) {
  if (free.is_no()) return free.no();
  if (free.is_unknown()) return free.unknown();
  return checked(q, Endomorphism::type1(q.source.m(), q.source.n(), free.witness(), ab.Q, ab.P));
}

}  // namespace

std::optional<TypeIIData> type2_feasible(const IntVector& a, const IntVector& uab, const FreeWord& v) {
  const Eigen::Index m = a.size(), n = uab.size();
  if (m < 1 || n < 1) throw std::invalid_argument("type2_feasible needs m >= 1 and n >= 1");
  if (v.rank() != n) throw RankError("type2_feasible: v has the wrong rank");
  const Integer alpha = vec_gcd(a), mu = vec_gcd(uab);
  IntVector l = IntVector::Zero(m), h = IntVector::Zero(n);

  if (v.is_identity()) {
    // Exponent 0 with l != 0.
    const FreeWord w = FreeWord::generator(1, static_cast<int>(n));
    if (alpha == 0) {
      l(0) = 1;
    } else if (m >= 2) {
      Eigen::Index zero = 0;
      while (zero < m && a(zero) != 0) ++zero;
      if (zero < m) {
        l(zero) = 1;
      } else {
        l(0) = a(1);
        l(1) = -a(0);
      }
    } else if (mu != 0) {
      const Integer g = gcd(alpha, mu);
      l(0) = exact_div(mu, g);
      h = vec_bezout(uab) * Integer(-exact_div(a(0), g));
    } else {
      return std::nullopt;
    }
    return TypeIIData{w, l, h};
  }

  const PrimitiveRoot root = primitive_root(v);
  FreeWord w = root.root;
  Integer k = root.exponent;
  if (const FreeWord inv = w.inverse(); shortlex_less(inv, w)) {
    w = inv;
    k = -k;
  }
  if (alpha == 0 && mu == 0) return std::nullopt;
  if (alpha == 0) {
    if (!divides(mu, k)) return std::nullopt;
    l(0) = 1;
    h = vec_bezout(uab) * Integer(exact_div(k, mu));
  } else if (mu == 0) {
    if (!divides(alpha, k)) return std::nullopt;
    l = vec_bezout(a) * Integer(exact_div(k, alpha));
  } else {
    const Bezout bz = bezout(alpha, mu);
    if (!divides(bz.g, k)) return std::nullopt;
    const Integer c = exact_div(k, bz.g);
    const IntVector da = vec_bezout(a), dh = vec_bezout(uab);
    l = da * Integer(c * bz.s);
    h = dh * Integer(c * bz.t);
    if (is_zero(l)) {
      // a (l + mu e1) + uab (h - a1 dh) has the same value.
      l(0) = mu;
      h -= dh * a(0);
    }
  }
  return TypeIIData{w, l, h};
}

bool verify(const Endomorphism& e, const GroupElement& source, const GroupElement& target, Family family) {
  if (e.m() != source.m() || e.n() != source.n() || !(source.m() == target.m() && source.n() == target.n()))
    return false;
  return apply_endo(e, source) == target && family_holds(e, family);
}

EndoDecision decide(const WhiteheadQuery& q) {
  const GroupElement& s = q.source;
  const GroupElement& t = q.target;
  if (s.m() != t.m() || s.n() != t.n()) throw RankError("source and target live in different groups");
  if (q.bound && *q.bound < 1) throw std::invalid_argument("search bound must be at least 1");
  const int m = s.m(), n = s.n();
  if (n <= 1) return decide_low_rank(q);

  const FreeWord& u = s.free;
  const FreeWord& v = t.free;
  const long bound = q.bound.value_or(default_bound(v));

  const AbelianInstance inst{s.abelian, abelianize(u), t.abelian, q.family};
  const auto ab = solve_linear_pair(inst);
  std::vector<Certificate> reasons;
  if (!ab)
    reasons.push_back({Reason::AbelianUnsolvable, "no " + std::string(family_name(q.family)) +
                                                       " solution of a Q + u^ab P = b with a = " +
                                                       to_string(inst.a) + ", u^ab = " + to_string(inst.uab) +
                                                       ", b = " + to_string(inst.b)});

  switch (q.family) {
    case Family::Auto: {
      auto phi = aut_equivalent(u, v);
      if (!phi) reasons.push_back({Reason::NotAutomorphic, u.str() + " and " + v.str() + " lie in different Aut(F_n)-orbits"});
      if (!reasons.empty()) return No{std::move(reasons)};
      return checked(q, Endomorphism::type1(m, n, std::move(*phi), ab->Q, ab->P));
    }
    case Family::Mono:
      if (!ab) return No{std::move(reasons)};
      return from_free(q, mono_image_decide(u, v, bound), *ab);
    case Family::Endo: {
      if (!ab) return No{std::move(reasons)};
      if (m >= 1) {
        if (auto t2 = type2_feasible(inst.a, inst.uab, v))
          return checked(q, Endomorphism::type2(std::move(t2->w), std::move(t2->l), std::move(t2->h), ab->Q, ab->P));
        reasons.push_back({Reason::TypeIIInfeasible, "no w, l != 0, h with w^(a l + u^ab h) = " + v.str()});
      }
      EndoDecision free = from_free(q, endo_image_decide(u, v, bound), *ab);
      if (!free.is_no()) return free;
      for (const Certificate& c : free.no().reasons) reasons.push_back(c);
      return No{std::move(reasons)};
    }
  }
  throw InternalDefect("decide: unknown family");
}

bool check_certificate(const Certificate& c, const WhiteheadQuery& q) {
  const GroupElement& s = q.source;
  const GroupElement& t = q.target;
  switch (c.code) {
    case Reason::AbelianUnsolvable:
      return s.n() >= 2 && !abelian_solvable({s.abelian, abelianize(s.free), t.abelian, q.family});
    case Reason::NotAutomorphic:
      return s.n() >= 2 && !aut_equivalent(s.free, t.free);
    case Reason::TypeIIInfeasible:
      return s.n() >= 2 && s.m() >= 1 && !type2_feasible(s.abelian, abelianize(s.free), t.free);
    case Reason::RankSplit:
      return s.n() <= 1 && !pure_abelian_whitehead(flatten(s), flatten(t), q.family);
    default:
      return s.n() >= 2 && check_certificate(c, s.free, t.free);
  }
}

}  // namespace whp
