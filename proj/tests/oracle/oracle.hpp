#pragma once

// Exhaustive ground truth for small instances. Deliberately naive; nothing here is
// shared with the library's search code beyond the word and element types.

#include "whp/diophantine.hpp"
#include "whp/element.hpp"
#include "whp/endomorphism.hpp"

#include <optional>
#include <set>
#include <vector>

namespace whp::oracle {

struct EnumBounds {
  int word_length = 3;
  int entry = 3;
};

/// All reduced words of length <= max_len in shortlex order.
std::vector<FreeWord> enumerate_words(int n, int max_len);

/// Images of the Whitehead automorphisms of F_n, rebuilt from the defining rules.
std::vector<FreeImages> whitehead_images(int n);

/// Orbit of u under Whitehead automorphisms, keeping only words of length <= cap.
std::set<FreeWord, ShortlexLess> brute_aut_orbit(const FreeWord& u, int cap);

/// Least rotation of the cyclic reduction of w under letter order x1 < X1 < x2 < ...
FreeWord cyclic_canonical(const FreeWord& w);

/// Partition of the cyclic words of length <= cap into Whitehead orbits (edges only
/// between words within the cap). component(w) is an orbit label.
class CyclicOrbits {
 public:
  CyclicOrbits(int n, int cap);
  int component(const FreeWord& w) const;

 private:
  int find(int i) const;
  std::vector<FreeWord> words_;
  mutable std::vector<int> parent_;
};

/// Some phi with u phi = v within the word bound (Mono: injective, Auto: bijective).
std::optional<FreeImages> brute_free_images(const FreeWord& u, const FreeWord& v, Family family, int word_length);

/// (Q, P) with entries in [-entry, entry], a Q + uab P = b and the family det filter.
std::optional<AbelianWitness> brute_abelian(const IntVector& a, const IntVector& uab, const IntVector& b,
                                            Family family, int entry);

/// Type II free data (w, l, h) with |w| <= word_length, entries of l, h in the box, l != 0.
struct BruteTypeII {
  FreeWord w;
  IntVector l;
  IntVector h;
};
std::optional<BruteTypeII> brute_type2(const IntVector& a, const IntVector& uab, const FreeWord& v, EnumBounds b);

/// First Type I or Type II datum within the bounds sending source to target.
/// Type II data is only tried for Family::Endo. Results are memoised.
std::optional<Endomorphism> brute_morphism_search(const GroupElement& source, const GroupElement& target,
                                                  Family family, EnumBounds bounds);

/// Does the set {a Q : Q in box, det filter} + {uab P : P in box} contain b? Works on
/// machine integers and caches the sumset per (a, uab, family).
bool brute_abelian_exists(const std::vector<int>& a, const std::vector<int>& uab, const std::vector<int>& b,
                          Family family, int entry);

/// x with x_i = c_i (mod modulus), x_i in [c_i - 3 modulus, c_i + 3 modulus], gcd(x) = 1.
bool brute_gcd_representative(const std::vector<long>& c, long modulus);

}  // namespace whp::oracle
