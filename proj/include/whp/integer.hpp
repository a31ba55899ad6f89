#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace whp {

/// Arbitrary precision integer used for every abelian coordinate and matrix entry.
using Integer = mpz_class;

template <class Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = RowVector<Integer>;
using IntMatrix = Matrix<Integer>;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// g = s*a + t*b with g = gcd(a, b) >= 0.
struct Bezout {
  Integer g, s, t;
};

inline Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Least nonnegative residue of x modulo mod (mod >= 1).
inline Integer mod_floor(const Integer& x, const Integer& mod) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  return r;
}

/// Exact quotient; callers guarantee divisibility.
inline Integer exact_div(const Integer& x, const Integer& d) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

/// Inverse of x modulo mod, if it exists (mod >= 1). Result is in [0, mod).
inline std::optional<Integer> mod_inverse(const Integer& x, const Integer& mod) {
  if (mod == 1) return Integer(0);
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

std::optional<long> to_long(const Integer& x);

/// gcd of the absolute values of the entries; 0 for the zero (or empty) vector.
template <class Derived>
typename Derived::Scalar vec_gcd(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Scalar g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, Scalar(v(i)));
  return g;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

/// Bezout vector d with v * d^T = vec_gcd(v).
template <class Derived>
RowVector<typename Derived::Scalar> vec_bezout(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  RowVector<Scalar> d = RowVector<Scalar>::Zero(v.size());
  Scalar g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Bezout b = bezout(g, Scalar(v(i)));
    for (Eigen::Index j = 0; j < i; ++j) d(j) = Scalar(d(j) * b.s);
    d(i) = b.t;
    g = b.g;
  }
  return d;
}

/// Shape-aware equality (Eigen's operator== asserts on mismatched shapes).
template <class A, class B>
bool same(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

/// Exact determinant via fraction-free (Bareiss) elimination. The 0x0 determinant is 1.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = exact_div(num, prev);
      }
    }
    prev = a(k, k);
  }
  return n == 0 ? Scalar(1) : Scalar(sign * a(n - 1, n - 1));
}

/// Inverse of a unimodular integer matrix (|det| = 1); nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& q);

std::string to_string(const IntVector& v);
std::string to_string(const IntMatrix& q);

}  // namespace whp
