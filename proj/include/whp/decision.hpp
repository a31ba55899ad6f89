#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace whp {

/// Which certified filter produced a No.
enum class Reason {
  TrivialSource,        // u = 1 but v != 1
  TrivialityMismatch,   // injective map, exactly one of u, v is 1
  AbelianVanishes,      // u^ab = 0 but v^ab != 0
  AbelianIndivisible,   // gcd(u^ab) does not divide every entry of v^ab
  PowerMismatch,        // u = r^k (k > 1) but v is not a k-th power of the required shape
  NotAutomorphic,       // free parts lie in different Aut(F_n)-orbits
  AbelianUnsolvable,    // aQ + u^ab P = b has no solution in the requested family
  TypeIIInfeasible,     // no Type II data (w, l, h) reaches the target free part
  RankSplit,            // low-rank reduction to Z^k found no matrix
};

std::string_view reason_name(Reason r);

struct Certificate {
  Reason code;
  std::string detail;
};

template <class W>
struct Yes {
  W witness;
};

struct No {
  std::vector<Certificate> reasons;
};

struct Unknown {
  long bound;
  std::string hint;
};

/// Yes(witness) / No(certificates) / Unknown(bound).
template <class W>
class Decision {
 public:
  Decision(Yes<W> y) : value_(std::move(y)) {}
  Decision(No n) : value_(std::move(n)) {}
  Decision(Unknown u) : value_(std::move(u)) {}

  bool is_yes() const { return std::holds_alternative<Yes<W>>(value_); }
  bool is_no() const { return std::holds_alternative<No>(value_); }
  bool is_unknown() const { return std::holds_alternative<Unknown>(value_); }

  const W& witness() const { return std::get<Yes<W>>(value_).witness; }
  const No& no() const { return std::get<No>(value_); }
  const Unknown& unknown() const { return std::get<Unknown>(value_); }

  std::string_view label() const { return is_yes() ? "yes" : is_no() ? "no" : "unknown"; }

 private:
  std::variant<Yes<W>, No, Unknown> value_;
};

inline No no_because(Reason r, std::string detail) { return No{{Certificate{r, std::move(detail)}}}; }

}  // namespace whp
