#include "whp/integer.hpp"

#include <sstream>

namespace whp {

std::optional<long> to_long(const Integer& x) {
  if (!x.fits_slong_p()) return std::nullopt;
  return x.get_si();
}

namespace {

IntMatrix minor_of(const IntMatrix& q, Eigen::Index row, Eigen::Index col) {
  const Eigen::Index n = q.rows();
  IntMatrix out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out(oi, oj++) = q(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& q) {
  if (q.rows() != q.cols()) return std::nullopt;
  const Eigen::Index n = q.rows();
  const Integer det = determinant(q);
  if (det != 1 && det != -1) return std::nullopt;
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = det;
    return inv;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Integer cof = determinant(minor_of(q, j, i));
      if ((i + j) % 2 == 1) cof = -cof;
      inv(i, j) = cof * det;  // det is its own inverse
    }
  }
  return inv;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i).get_str();
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& q) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (Eigen::Index j = 0; j < q.cols(); ++j) os << (j ? "," : "") << q(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace whp
