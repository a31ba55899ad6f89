#pragma once

#include "whp/element.hpp"
#include "whp/integer.hpp"
#include "whp/word.hpp"

#include "json.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace whp {

/// (a, u) -> (a Q + u^ab P, u phi) with phi an endomorphism of F_n.
struct TypeI {
  FreeImages phi;
  IntMatrix Q;  // m x m
  IntMatrix P;  // n x m
};

/// (a, u) -> (a Q + u^ab P, w^(a l^T + u^ab h^T)) with w not a proper power, l != 0.
struct TypeII {
  FreeWord w;
  IntVector l;  // length m
  IntVector h;  // length n
  IntMatrix Q;
  IntMatrix P;
};

enum class EndoKind { TypeI, TypeII };

/// Endomorphism of Z^m x F_n in normal form. Every generator image with trivial
/// free part is Type I; Type II keeps w as the shortlex-smaller of root^{+-1}.
class Endomorphism {
 public:
  static Endomorphism type1(FreeImages phi, IntMatrix Q, IntMatrix P);
  /// `m` and `n` are needed when phi is empty or the matrices are empty.
  static Endomorphism type1(int m, int n, FreeImages phi, IntMatrix Q, IntMatrix P);
  /// Normalizes w to its canonical root, folding exponents into l and h.
  static Endomorphism type2(FreeWord w, IntVector l, IntVector h, IntMatrix Q, IntMatrix P);
  static Endomorphism identity(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  EndoKind kind() const { return std::holds_alternative<TypeI>(data_) ? EndoKind::TypeI : EndoKind::TypeII; }
  const TypeI& type_i() const { return std::get<TypeI>(data_); }
  const TypeII& type_ii() const { return std::get<TypeII>(data_); }
  const IntMatrix& Q() const;
  const IntMatrix& P() const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b);

 private:
  Endomorphism(int m, int n, std::variant<TypeI, TypeII> data) : m_(m), n_(n), data_(std::move(data)) {}
  int m_;
  int n_;
  std::variant<TypeI, TypeII> data_;
};

struct Classification {
  bool is_mono;
  bool is_epi;
  bool is_auto;
  EndoKind kind;
};

/// Builds the endomorphism with the given images of t_1..t_m, x_1..x_n.
/// Throws RelationError when the images cannot come from an endomorphism.
Endomorphism recognize(std::span<const GroupElement> images, int m, int n);

/// Images of t_1..t_m, x_1..x_n.
std::vector<GroupElement> generator_images(const Endomorphism& e);

GroupElement apply_endo(const Endomorphism& e, const GroupElement& g);

/// Right action: `first` acts, then `second`.
Endomorphism compose(const Endomorphism& first, const Endomorphism& second);

/// Row j is abelianize(phi(x_j)), so u^ab M = (u phi)^ab.
IntMatrix abelianization_matrix(std::span<const FreeWord> phi, int n);

/// Requires n >= 2 (throws RankError otherwise).
Classification classify(const Endomorphism& e);

/// Two-sided inverse of an automorphism; nullopt if e is not invertible. Works for
/// every rank (for n <= 1 through the matrix of Z^{m+n}).
std::optional<Endomorphism> inverse(const Endomorphism& e);

/// For n <= 1, G is free abelian of rank m + n; the (m+n)x(m+n) matrix of e on it.
IntMatrix abelian_matrix(const Endomorphism& e);

/// Inverse of abelian_matrix: the endomorphism of Z^m x F_n (n <= 1) whose
/// generator images are the rows of `mat`.
Endomorphism endo_from_abelian_matrix(const IntMatrix& mat, int m, int n);

/// Structured text form: {"type","m","n", "phi" | "w","l","h", "Q","P"}. Integers
/// are JSON numbers when they fit in 64 bits and decimal strings otherwise.
nlohmann::ordered_json to_json(const Endomorphism& e);
Endomorphism endo_from_json(const nlohmann::json& j);
std::string serialize(const Endomorphism& e);
Endomorphism deserialize(const std::string& text);

std::string describe(const Endomorphism& e);

}  // namespace whp
