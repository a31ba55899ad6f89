#include "whp/diophantine.hpp"

#include "whp/error.hpp"

#include <stdexcept>

namespace whp {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Endo: return "end";
    case Family::Mono: return "mon";
    case Family::Auto: return "aut";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "end") return Family::Endo;
  if (s == "mon") return Family::Mono;
  if (s == "aut") return Family::Auto;
  return std::nullopt;
}

namespace {

void check_shape(const AbelianInstance& inst) {
  if (inst.a.size() != inst.b.size())
    throw RankError("abelian instance: a and b have different lengths");
}

bool family_ok(Family f, const IntMatrix& q) {
  if (f == Family::Endo) return true;
  const Integer det = determinant(q);
  return f == Family::Mono ? det != 0 : (det == 1 || det == -1);
}

bool all_divisible(const Integer& d, const IntVector& b) {
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (!divides(d, b(i))) return false;
  return true;
}

// Residues x_i of the generic system alpha x_i + mu y_i = b_i, least nonnegative
// modulo mu/g.
IntVector generic_residues(const Integer& alpha, const Integer& mu, const IntVector& b) {
  const Integer g = gcd(alpha, mu);
  const Integer reduced_mod = exact_div(mu, g);
  const Integer inv = *mod_inverse(exact_div(alpha, g), reduced_mod);
  IntVector c(b.size());
  for (Eigen::Index i = 0; i < b.size(); ++i) c(i) = mod_floor(Integer(exact_div(b(i), g) * inv), reduced_mod);
  return c;
}

IntMatrix column_times_row(const IntVector& col, const IntVector& row) {
  IntMatrix out(col.size(), row.size());
  for (Eigen::Index i = 0; i < col.size(); ++i)
    for (Eigen::Index j = 0; j < row.size(); ++j) out(i, j) = col(i) * row(j);
  return out;
}

// Square matrix with first row x and nonzero determinant (x != 0).
IntMatrix complete_nonsingular(const IntVector& x) {
  const Eigen::Index m = x.size();
  Eigen::Index p = 0;
  while (x(p) == 0) ++p;
  IntMatrix out = IntMatrix::Zero(m, m);
  out.row(0) = x;
  for (Eigen::Index k = 0, r = 1; k < m; ++k) {
    if (k == p) continue;
    out(r++, k) = 1;
  }
  return out;
}

AbelianWitness verified(const AbelianInstance& inst, AbelianWitness w) {
  if (!satisfies(inst, w)) throw InternalDefect("solve_linear_pair: constructed witness does not verify");
  return w;
}

}  // namespace

bool satisfies(const AbelianInstance& inst, const AbelianWitness& w) {
  const Eigen::Index m = inst.a.size(), n = inst.uab.size();
  if (w.Q.rows() != m || w.Q.cols() != m || w.P.rows() != n || w.P.cols() != m) return false;
  IntVector lhs = IntVector::Zero(m);
  if (m > 0) lhs = inst.a * w.Q;
  if (m > 0 && n > 0) lhs += inst.uab * w.P;
  return same(lhs, inst.b) && family_ok(inst.family, w.Q);
}

bool abelian_solvable(const AbelianInstance& inst) {
  check_shape(inst);
  if (inst.a.size() == 0) return true;
  const Integer alpha = vec_gcd(inst.a);
  const Integer mu = vec_gcd(inst.uab);
  if (alpha == 0 && mu == 0) return is_zero(inst.b);
  if (alpha == 0) return all_divisible(mu, inst.b);
  if (mu == 0) {
    if (!all_divisible(alpha, inst.b)) return false;
    if (inst.family == Family::Mono) return !is_zero(inst.b);
    if (inst.family == Family::Auto) return vec_gcd(inst.b) == alpha;
    return true;
  }
  const Integer g = gcd(alpha, mu);
  if (!all_divisible(g, inst.b)) return false;
  if (inst.family != Family::Auto) return true;
  return gcd_congruence_criterion(generic_residues(alpha, mu, inst.b), exact_div(mu, g));
}

std::optional<AbelianWitness> solve_linear_pair(const AbelianInstance& inst) {
  check_shape(inst);
  const Eigen::Index m = inst.a.size(), n = inst.uab.size();
  if (m == 0) return AbelianWitness{IntMatrix(0, 0), IntMatrix(n, 0)};
  if (!abelian_solvable(inst)) return std::nullopt;

  const Integer alpha = vec_gcd(inst.a);
  const Integer mu = vec_gcd(inst.uab);
  const IntMatrix identity = IntMatrix::Identity(m, m);

  if (alpha == 0 && mu == 0) return verified(inst, {identity, IntMatrix::Zero(n, m)});

  if (alpha == 0) {
    IntVector scaled(m);
    for (Eigen::Index i = 0; i < m; ++i) scaled(i) = exact_div(inst.b(i), mu);
    return verified(inst, {identity, column_times_row(vec_bezout(inst.uab), scaled)});
  }

  IntVector a_prim(m);
  for (Eigen::Index i = 0; i < m; ++i) a_prim(i) = exact_div(inst.a(i), alpha);
  const IntMatrix to_e1 = reduce_to_first_basis(a_prim).first;

  if (mu == 0) {
    const IntMatrix zero_p = IntMatrix::Zero(n, m);
    if (inst.family == Family::Endo) {
      IntMatrix x = IntMatrix::Zero(m, m);
      for (Eigen::Index i = 0; i < m; ++i) x(0, i) = exact_div(inst.b(i), alpha);
      return verified(inst, {IntMatrix(to_e1 * x), zero_p});
    }
    // b = beta b' with b' primitive; go a' -> e1, scale by beta/alpha, then e1 -> b'.
    const Integer beta = vec_gcd(inst.b);
    IntVector b_prim(m);
    for (Eigen::Index i = 0; i < m; ++i) b_prim(i) = exact_div(inst.b(i), beta);
    const IntMatrix from_e1 = reduce_to_first_basis(b_prim).second;
    IntMatrix scale = identity;
    scale(0, 0) = exact_div(beta, alpha);
    return verified(inst, {IntMatrix(to_e1 * scale * from_e1), zero_p});
  }

  // Generic case: a Q = alpha x, uab P = mu y, alpha x_i + mu y_i = b_i.
  const Integer g = gcd(alpha, mu);
  const Integer reduced_mod = exact_div(mu, g);
  IntVector x = generic_residues(alpha, mu, inst.b);
  IntMatrix row_part;
  switch (inst.family) {
    case Family::Endo:
      row_part = IntMatrix::Zero(m, m);
      row_part.row(0) = x;
      break;
    case Family::Mono:
      if (is_zero(x)) x(0) += reduced_mod;
      row_part = complete_nonsingular(x);
      break;
    case Family::Auto: {
      auto prim = gcd_congruence(x, reduced_mod);
      if (!prim) return std::nullopt;
      x = *prim;
      row_part = reduce_to_first_basis(x).second;
      break;
    }
  }
  IntVector y(m);
  for (Eigen::Index i = 0; i < m; ++i) y(i) = exact_div(Integer(inst.b(i) - alpha * x(i)), mu);
  return verified(inst, {IntMatrix(to_e1 * row_part), column_times_row(vec_bezout(inst.uab), y)});
}

bool gcd_congruence_criterion(const IntVector& c, const Integer& modulus) {
  if (modulus < 1) throw std::invalid_argument("gcd_congruence: modulus must be >= 1");
  if (c.size() == 0) return false;
  if (c.size() == 1)
    return divides(modulus, Integer(c(0) - 1)) || divides(modulus, Integer(c(0) + 1));
  return gcd(vec_gcd(c), modulus) == 1;
}

std::optional<IntVector> gcd_congruence(const IntVector& c, const Integer& modulus) {
  if (!gcd_congruence_criterion(c, modulus)) return std::nullopt;
  IntVector x = c;
  if (c.size() == 1) {
    x(0) = divides(modulus, Integer(c(0) - 1)) ? 1 : -1;
    return x;
  }
  if (x(0) == 0) x(0) = modulus;
  // Every prime of rest divides neither modulus and c_2 at once, so some shift of
  // x_2 by multiples of the modulus is coprime to it.
  Integer rest = x(0);
  for (Eigen::Index i = 2; i < x.size(); ++i) rest = gcd(rest, x(i));
  while (gcd(rest, x(1)) != 1) x(1) += modulus;
  if (vec_gcd(x) != 1) throw InternalDefect("gcd_congruence: representative is not primitive");
  return x;
}

std::pair<IntMatrix, IntMatrix> reduce_to_first_basis(const IntVector& v) {
  const Eigen::Index m = v.size();
  if (m == 0 || vec_gcd(v) != 1) throw std::invalid_argument("reduce_to_first_basis: vector is not primitive");
  IntMatrix r = IntMatrix::Identity(m, m);
  IntMatrix r_inv = IntMatrix::Identity(m, m);
  IntVector w = v;
  // Column operations on the 2x2 block (0, j): E = [[s, -q/g], [t, p/g]] sends (p, q) to (g, 0).
  for (Eigen::Index j = 1; j < m; ++j) {
    const Integer p = w(0), q = w(j);
    if (q == 0) continue;
    const Bezout bz = bezout(p, q);
    const Integer pg = exact_div(p, bz.g), qg = exact_div(q, bz.g);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Integer c0 = r(i, 0), cj = r(i, j);
      r(i, 0) = c0 * bz.s + cj * bz.t;
      r(i, j) = -c0 * qg + cj * pg;
    }
    // E^-1 = [[p/g, q/g], [-t, s]] applied to rows 0 and j.
    for (Eigen::Index k = 0; k < m; ++k) {
      const Integer r0 = r_inv(0, k), rj = r_inv(j, k);
      r_inv(0, k) = pg * r0 + qg * rj;
      r_inv(j, k) = -bz.t * r0 + bz.s * rj;
    }
    w(0) = bz.g;
    w(j) = 0;
  }
  if (w(0) == -1) {
    r.col(0) = -r.col(0);
    r_inv.row(0) = -r_inv.row(0);
  }
  return {r, r_inv};
}

IntMatrix transport_primitive(const IntVector& src, const IntVector& dst) {
  if (src.size() != dst.size()) throw RankError("transport_primitive: length mismatch");
  IntMatrix q = reduce_to_first_basis(src).first * reduce_to_first_basis(dst).second;
  return q;
}

std::optional<IntMatrix> pure_abelian_whitehead(const IntVector& a, const IntVector& b, Family family) {
  auto w = solve_linear_pair({a, IntVector(0), b, family});
  if (!w) return std::nullopt;
  return w->Q;
}

}  // namespace whp
