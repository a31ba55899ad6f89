#pragma once

#include "whp/integer.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace whp {

/// Transformation family of a Whitehead problem.
enum class Family { Endo, Mono, Auto };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);

/// The abelian condition a Q + uab P = b, with Q constrained by the family
/// (none / det Q != 0 / det Q = +-1).
struct AbelianInstance {
  IntVector a;
  IntVector uab;
  IntVector b;
  Family family;
};

struct AbelianWitness {
  IntMatrix Q;  // m x m
  IntMatrix P;  // n x m
};

bool satisfies(const AbelianInstance& inst, const AbelianWitness& w);

/// Decision criterion only (no witness construction). With alpha = gcd(a),
/// mu = gcd(uab), g = gcd(alpha, mu):
///   a != 0, uab != 0: g | b; Auto additionally needs a gcd-one representative of
///                     x = (b/g) (alpha/g)^-1 mod mu/g;
///   a  = 0, uab != 0: mu | b;
///   a != 0, uab  = 0: alpha | b; Mono needs b != 0; Auto needs gcd(b) = alpha;
///   a  = 0, uab  = 0: b = 0.
bool abelian_solvable(const AbelianInstance& inst);

/// Solves the abelian condition, returning a verified witness when one exists.
/// Throws RankError on inconsistent lengths; an unverifiable witness is an InternalDefect.
std::optional<AbelianWitness> solve_linear_pair(const AbelianInstance& inst);

/// x with x_i = c_i (mod modulus) and gcd(x) = 1, if any. Throws on modulus < 1.
std::optional<IntVector> gcd_congruence(const IntVector& c, const Integer& modulus);

/// The existence criterion used by gcd_congruence: m = 1 needs c = +-1 (mod modulus),
/// m >= 2 needs gcd(c_1, ..., c_m, modulus) = 1.
bool gcd_congruence_criterion(const IntVector& c, const Integer& modulus);

/// Unimodular R with v R = e_1 together with its inverse; v must be primitive.
std::pair<IntMatrix, IntMatrix> reduce_to_first_basis(const IntVector& v);

/// Unimodular Q with src Q = dst. Both vectors must be primitive (gcd 1).
IntMatrix transport_primitive(const IntVector& src, const IntVector& dst);

/// Whitehead problem in Z^m: a matrix Q of the family with a Q = b, if any.
std::optional<IntMatrix> pure_abelian_whitehead(const IntVector& a, const IntVector& b, Family family);

}  // namespace whp
