#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "g2/form.hpp"
#include "g2/g2_structure.hpp"
#include "g2/matrix.hpp"
#include "g2/series.hpp"

namespace g2 {

/// phi_t = phi + t xi as a form with series coefficients.
template <class C>
Form<TSeries<C>> perturbed_phi(const Form<C>& xi) {
  Form<TSeries<C>> phi_t = form_cast<TSeries<C>>(form_cast<C>(standard_phi()));
  for (const auto& [index, c] : xi.terms()) phi_t.add(index, TSeries<C>(C(0), c, C(0)));
  return phi_t;
}

/// (B_t)_ij = ((e_i _| phi_t) ^ (e_j _| phi_t) ^ phi_t) evaluated on the
/// oriented frame, by full trilinear expansion truncated at t^2.
template <class C>
SeriesMatrix<C> bilinear_form_B(const Form<C>& xi) {
  if (xi.degree() != 3) throw std::invalid_argument("bilinear_form_B: expected a 3-form");
  using S = TSeries<C>;
  const Form<S> phi_t = perturbed_phi(xi);
  std::array<Form<S>, kDim> contracted;
  for (int i = 0; i < kDim; ++i) contracted[i] = interior_product(i + 1, phi_t);
  const S orient(C(Rational(sign_of(kG2Orientation))));
  SeriesMatrix<C> b;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      const S v = orient * top_form_evaluate(wedge(wedge(contracted[i], contracted[j]), phi_t));
      b(i, j) = v;
      b(j, i) = v;
    }
  return b;
}

/// g_t = g0 + t g1 + t^2 g2 and vol_t = sqrt(det g_t) = vol0 + t vol1 + t^2 vol2.
template <class C>
struct MetricSeries {
  Matrix7<C> g0, g1, g2;
  C vol0, vol1, vol2;

  SeriesMatrix<C> metric() const { return make_series<C>(g0, g1, g2); }
  TSeries<C> volume() const { return {vol0, vol1, vol2}; }
};

template <class C>
C trace(const Matrix7<C>& m) {
  C t(0);
  for (int i = 0; i < kDim; ++i) t += m(i, i);
  return t;
}

/// Determinant of I + t b1 + t^2 b2 modulo t^3.
template <class C>
TSeries<C> unit_determinant(const Matrix7<C>& b1, const Matrix7<C>& b2) {
  const C tr1 = trace(b1);
  const Matrix7<C> sq = b1 * b1;
  return {C(Rational(1)), tr1, C(trace(b2) + (tr1 * tr1 - trace(sq)) * Rational(1, 2))};
}

/// Solves B_t = 6 g_t sqrt(det g_t): det g_t = (det(B_t/6))^(2/9),
/// vol_t = (det(B_t/6))^(1/9), g_t = (B_t/6) / vol_t.
template <class C>
MetricSeries<C> metric_from_B(const SeriesMatrix<C>& b) {
  if (!is_symmetric<TSeries<C>>(b)) throw std::invalid_argument("metric_from_B: B_t is not symmetric");
  const Rational sixth(1, 6);
  Matrix7<C> b0 = coefficient(b, 0), b1 = coefficient(b, 1), b2 = coefficient(b, 2);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      b0(i, j) = C(b0(i, j) * sixth);
      b1(i, j) = C(b1(i, j) * sixth);
      b2(i, j) = C(b2(i, j) * sixth);
    }
  if (!is_identity<C>(b0)) throw std::domain_error("metric_from_B: t^0 part of B_t must be 6 I");
  const TSeries<C> vol = series_fractional_power(unit_determinant(b1, b2), Rational(1, 9));
  const TSeries<C> inv_vol = series_fractional_power(vol, Rational(-1));
  MetricSeries<C> m;
  m.g0 = b0;
  m.g1 = b1;
  m.g2 = b2;
  for (int i = 0; i < kDim; ++i) {
    m.g1(i, i) += inv_vol.c1;
    m.g2(i, i) += inv_vol.c2;
  }
  m.g2 += b1 * inv_vol.c1;
  m.vol0 = vol.c0;
  m.vol1 = vol.c1;
  m.vol2 = vol.c2;
  return m;
}

/// The frame metric: g = I, vol = 1.
template <class C>
MetricSeries<C> identity_metric() {
  return {Matrix7<C>::Identity(), Matrix7<C>::Zero(), Matrix7<C>::Zero(), C(Rational(1)), C(0), C(0)};
}

template <class C>
struct StarSeries {
  Form<C> star0, star1, star2;

  const Form<C>& operator[](int k) const {
    switch (k) {
      case 0: return star0;
      case 1: return star1;
      case 2: return star2;
    }
    throw std::out_of_range("series order must be 0, 1 or 2");
  }
};

/// *_t = *0 + t *1 + t^2 *2 for a metric series:
/// *_t(e^I) = o vol_t sum_J det(g_t^{-1}[I, J]) sign(J, J^c) e^{J^c}.
template <class C>
class HodgeSeries {
 public:
  using S = TSeries<C>;

  explicit HodgeSeries(const MetricSeries<C>& m)
      : inverse_(series_matrix_inverse(m.metric())), volume_(m.volume()) {}

  StarSeries<C> apply(const Form<C>& a) const {
    const int k = a.degree();
    Form<S> acc(kDim - k);
    const auto targets = basis_indices(k);
    for (const auto& [index, c] : a.terms()) {
      const auto rows = index.labels();
      for (MultiIndex j : targets) {
        const S minor = minor_det(rows, j.labels());
        if (is_zero(minor)) continue;
        const MultiIndex jc = j.complement();
        const int s = shuffle_sign(j, jc) * sign_of(kG2Orientation);
        const S term = S(c) * volume_ * minor;
        acc.add(jc, s > 0 ? term : S(-term));
      }
    }
    StarSeries<C> out{Form<C>(kDim - k), Form<C>(kDim - k), Form<C>(kDim - k)};
    for (const auto& [index, c] : acc.terms()) {
      out.star0.add(index, c.c0);
      out.star1.add(index, c.c1);
      out.star2.add(index, c.c2);
    }
    return out;
  }

  const SeriesMatrix<C>& inverse_metric() const { return inverse_; }
  const S& volume() const { return volume_; }

 private:
  /// det of g^{-1} restricted to rows x cols, by row expansion with pruning
  /// of products that vanish modulo t^3.
  S minor_det(const std::vector<int>& rows, const std::vector<int>& cols) const {
    if (rows.empty()) return S(C(Rational(1)));
    S total(C(0));
    std::vector<bool> used(cols.size(), false);
    expand(rows, cols, 0, S(C(Rational(1))), 1, used, total);
    return total;
  }

  void expand(const std::vector<int>& rows, const std::vector<int>& cols, std::size_t r, const S& prod, int sign,
              std::vector<bool>& used, S& total) const {
    if (r == rows.size()) {
      total += sign > 0 ? prod : S(-prod);
      return;
    }
    int passed = 0;  // unused columns to the left, for the permutation sign
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (used[c]) continue;
      const S& entry = inverse_(rows[r] - 1, cols[c] - 1);
      if (!is_zero(entry)) {
        const S next = prod * entry;
        if (!is_zero(next)) {
          used[c] = true;
          expand(rows, cols, r + 1, next, passed % 2 ? -sign : sign, used, total);
          used[c] = false;
        }
      }
      ++passed;
    }
  }

  SeriesMatrix<C> inverse_;
  S volume_;
};

template <class C>
StarSeries<C> hodge_star_series(const MetricSeries<C>& m, const Form<C>& a) {
  return HodgeSeries<C>(m).apply(a);
}

/// (*_t o *_t)(a) modulo t^3, by order.
template <class C>
std::array<Form<C>, 3> star_twice(const HodgeSeries<C>& h, const Form<C>& a) {
  const auto first = h.apply(a);
  std::array<Form<C>, 3> out{Form<C>(a.degree()), Form<C>(a.degree()), Form<C>(a.degree())};
  for (int i = 0; i <= 2; ++i) {
    const auto second = h.apply(first[i]);
    for (int j = 0; i + j <= 2; ++j) out[i + j] += second[j];
  }
  return out;
}

/// Second-order term of the Hitchin duality map at phi in direction xi:
/// Q4(xi) = *2 phi + *1 xi for the metric series of phi + t xi.
template <class C>
Form<C> quadratic_term_Q4(const Form<C>& xi) {
  if (xi.degree() != 3) throw std::invalid_argument("quadratic_term_Q4: expected a 3-form");
  const HodgeSeries<C> star(metric_from_B(bilinear_form_B(xi)));
  return star.apply(form_cast<C>(standard_phi())).star2 + star.apply(xi).star1;
}

}  // namespace g2
