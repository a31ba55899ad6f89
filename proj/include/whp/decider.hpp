#pragma once

#include "whp/decision.hpp"
#include "whp/diophantine.hpp"
#include "whp/element.hpp"
#include "whp/endomorphism.hpp"

#include <optional>

namespace whp {

/// Is there a transformation of the family sending source to target?
struct WhiteheadQuery {
  Family family;
  GroupElement source;
  GroupElement target;
  std::optional<long> bound;  // free-side search bound; default_bound(target.free) when absent
};

using EndoDecision = Decision<Endomorphism>;

/// Decides the query. Aut is always Yes or No; Mon and End may be Unknown when the
/// bounded free-side search is inconclusive. Every Yes witness is verified before it
/// is returned (InternalDefect otherwise).
///
/// Ranks: n = 0 and n = 1 reduce to a matrix problem on Z^m and Z^(m+1); m = 0 uses
/// the free deciders directly.
EndoDecision decide(const WhiteheadQuery& q);

/// Free-part data of a Type II map.
struct TypeIIData {
  FreeWord w;
  IntVector l;
  IntVector h;
};

/// (w, l, h) with l != 0 and w^(a l + uab h) = v, if any. w is canonical (the
/// shortlex-smaller of the root of v and its inverse; x1 when v = 1). Needs m >= 1, n >= 1.
std::optional<TypeIIData> type2_feasible(const IntVector& a, const IntVector& uab, const FreeWord& v);

/// apply_endo(e, source) == target and e belongs to the family.
bool verify(const Endomorphism& e, const GroupElement& source, const GroupElement& target, Family family);

/// Re-evaluates a No certificate from the query alone.
bool check_certificate(const Certificate& c, const WhiteheadQuery& q);

}  // namespace whp
