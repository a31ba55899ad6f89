#pragma once

#include "whp/decision.hpp"
#include "whp/word.hpp"

#include <cstddef>

namespace whp {

/// Heuristic default search bound max(2|v|, 4).
long default_bound(const FreeWord& v);

/// Does some endomorphism phi of F_n satisfy u phi = v?
///
/// No answers only come from certified filters (see Reason); Yes answers come from
/// the v = 1 and primitive-u shortcuts or from exhaustive search over image tuples
/// with |phi(x_i)| <= bound, ordered by total length then lexicographically.
/// Generators absent from u are sent to 1. Unknown(bound) when the search exhausts.
Decision<FreeImages> endo_image_decide(const FreeWord& u, const FreeWord& v, long bound);

/// Same question restricted to injective phi. No filters: u = 1 xor v = 1, the
/// abelian filters, and the root-exponent filter. Otherwise bounded search over all
/// n images with an injectivity check.
Decision<FreeImages> mono_image_decide(const FreeWord& u, const FreeWord& v, long bound);

/// Re-evaluates the premise of a free-side certificate from (u, v) alone.
bool check_certificate(const Certificate& c, const FreeWord& u, const FreeWord& v);

}  // namespace whp
