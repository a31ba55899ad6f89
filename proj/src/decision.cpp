#include "whp/decision.hpp"

namespace whp {

std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::TrivialSource: return "trivial-source";
    case Reason::TrivialityMismatch: return "triviality-mismatch";
    case Reason::AbelianVanishes: return "abelian-vanishes";
    case Reason::AbelianIndivisible: return "abelian-indivisible";
    case Reason::PowerMismatch: return "power-mismatch";
    case Reason::NotAutomorphic: return "not-automorphic";
    case Reason::AbelianUnsolvable: return "abelian-unsolvable";
    case Reason::TypeIIInfeasible: return "type-ii-infeasible";
    case Reason::RankSplit: return "rank-split";
  }
  return "unknown-reason";
}

}  // namespace whp
