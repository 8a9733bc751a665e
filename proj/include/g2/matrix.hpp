#pragma once

#include <Eigen/Core>

#include <stdexcept>

#include "g2/poly.hpp"
#include "g2/rational.hpp"
#include "g2/series.hpp"

namespace Eigen {

namespace g2_detail {
template <class S>
struct ExactNumTraits : GenericNumTraits<S> {
  using Real = S;
  using NonInteger = S;
  using Nested = S;
  using Literal = S;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
};
}  // namespace g2_detail

template <>
struct NumTraits<g2::Rational> : g2_detail::ExactNumTraits<g2::Rational> {};
template <>
struct NumTraits<g2::Poly> : g2_detail::ExactNumTraits<g2::Poly> {};
template <class C>
struct NumTraits<g2::TSeries<C>> : g2_detail::ExactNumTraits<g2::TSeries<C>> {};

}  // namespace Eigen

namespace g2 {

inline constexpr int kDim = 7;

template <class S>
using Matrix7 = Eigen::Matrix<S, kDim, kDim>;

template <class S>
using Vector7 = Eigen::Matrix<S, kDim, 1>;

template <class C>
using SeriesMatrix = Matrix7<TSeries<C>>;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
bool is_zero(const Matrix7<S>& m) {
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool is_symmetric(const Matrix7<S>& m) {
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <class S>
bool is_identity(const Matrix7<S>& m) {
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (!(m(i, j) == S(i == j ? 1 : 0))) return false;
  return true;
}

/// The t^k coefficient matrix of a series matrix.
template <class C>
Matrix7<C> coefficient(const SeriesMatrix<C>& m, int k) {
  Matrix7<C> r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r(i, j) = m(i, j)[k];
  return r;
}

template <class C>
SeriesMatrix<C> make_series(const Matrix7<C>& m0, const Matrix7<C>& m1, const Matrix7<C>& m2) {
  SeriesMatrix<C> r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r(i, j) = TSeries<C>(m0(i, j), m1(i, j), m2(i, j));
  return r;
}

/// Inverse of I + t G1 + t^2 G2 modulo t^3: I - t G1 + t^2 (G1^2 - G2).
template <class C>
SeriesMatrix<C> series_matrix_inverse(const SeriesMatrix<C>& m) {
  if (!is_identity<C>(coefficient(m, 0)))
    throw std::domain_error("series_matrix_inverse: t^0 part must be the identity");
  const Matrix7<C> g1 = coefficient(m, 1);
  const Matrix7<C> g2 = coefficient(m, 2);
  const Matrix7<C> g1sq = g1 * g1;
  return make_series<C>(Matrix7<C>::Identity(), -g1, g1sq - g2);
}

/// Rank by exact Gaussian elimination.
int exact_rank(RationalMatrix m);

/// Exact inverse of a square invertible rational matrix (Gauss-Jordan).
RationalMatrix exact_inverse(const RationalMatrix& m);

}  // namespace g2
