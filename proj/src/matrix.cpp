#include "g2/matrix.hpp"

#include <utility>

namespace g2 {

int exact_rank(RationalMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  int rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (is_zero(m(r, col))) continue;
      const Rational f = m(r, col) / m(rank, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

RationalMatrix exact_inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_inverse: matrix is not square");
  const Eigen::Index n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("exact_inverse: matrix is singular");
    a.row(pivot).swap(a.row(col));
    inv.row(pivot).swap(inv.row(col));
    const Rational p = a(col, col);
    for (Eigen::Index c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const Rational f = a(r, col);
      for (Eigen::Index c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace g2
