#include <random>

#include "doctest.h"
#include "g2/form_parser.hpp"
#include "g2/g2_structure.hpp"
#include "g2/stable_form_metric.hpp"

using namespace g2;

namespace {

using F = Form<Rational>;
using PF = Form<Poly>;
using S = TSeries<Poly>;

PF lift(const F& f) { return form_cast<Poly>(f); }

PF lift(std::string_view literal) { return lift(parse_form(literal)); }

F random_three_form(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  F f(3);
  for (MultiIndex i : basis_indices(3))
    if (rng() % 4 == 0) f.add(i, frac(c(rng), 1 + static_cast<long>(rng() % 3)));
  return f;
}

void check_round_trip(const SeriesMatrix<Poly>& b, const MetricSeries<Poly>& m) {
  // sqrt(det g_t) from the metric itself, then 6 g_t sqrt(det g_t) against B_t
  REQUIRE(is_identity<Poly>(m.g0));
  const S det_g = unit_determinant(m.g1, m.g2);
  const S root = series_fractional_power(det_g, Rational(1, 2));
  CHECK(root == m.volume());
  const SeriesMatrix<Poly> g = m.metric();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) CHECK(Rational(6) * g(i, j) * root == b(i, j));
}

}  // namespace

TEST_CASE("B of the unperturbed structure") {
  const auto b = bilinear_form_B(PF(3));
  CHECK(is_symmetric<S>(b));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) CHECK(b(i, j) == S(i == j ? 6 : 0));
  // brute-force value of one diagonal entry without the series machinery
  const F phi = standard_phi();
  const F w = wedge(wedge(interior_product(3, phi), interior_product(3, phi)), phi);
  CHECK(Rational(sign_of(kG2Orientation)) * top_form_evaluate(w) == 6);
  const auto m = metric_from_B(b);
  CHECK(is_identity<Poly>(m.g0));
  CHECK(is_zero<Poly>(m.g1));
  CHECK(is_zero<Poly>(m.g2));
  CHECK(m.vol0 == Poly(1));
  CHECK(m.vol1.is_zero());
  CHECK(m.vol2.is_zero());
}

TEST_CASE("B and metric for the scaling direction xi = phi") {
  const auto b = bilinear_form_B(lift(standard_phi()));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      CHECK(b(i, j) == (i == j ? S(Poly(6), Poly(18), Poly(18)) : S(0)));
  const auto m = metric_from_B(b);
  for (int i = 0; i < kDim; ++i) {
    CHECK(m.g1(i, i) == Poly(frac(2, 3)));
    CHECK(m.g2(i, i) == Poly(frac(-1, 9)));
  }
  CHECK(m.vol1 == Poly(frac(7, 3)));
  CHECK(m.vol2 == Poly(frac(14, 9)));
  check_round_trip(b, m);

  // conformal scaling: *_t phi = (1+t)^(1/3) psi
  const auto star = hodge_star_series(m, lift(standard_phi()));
  CHECK(star.star0 == lift(standard_psi()));
  CHECK(star.star1 == Poly(frac(1, 3)) * lift(standard_psi()));
  CHECK(star.star2 == Poly(frac(-1, 9)) * lift(standard_psi()));
}

TEST_CASE("B for A(e1): symmetric, direct evaluation of the linear block") {
  const PF xi = lift("5/3 e145 + 5/3 e167");
  const auto b = bilinear_form_B(xi);
  CHECK(is_symmetric<S>(b));
  const F phi = standard_phi(), x = parse_form("5/3 e145 + 5/3 e167");
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const F ip = interior_product(i + 1, phi), jp = interior_product(j + 1, phi);
      const F ix = interior_product(i + 1, x), jx = interior_product(j + 1, x);
      const Rational o = sign_of(kG2Orientation);
      const Rational lin = o * top_form_evaluate(wedge(wedge(ip, jp), x) + wedge(wedge(ix, jp), phi) +
                                                 wedge(wedge(ip, jx), phi));
      const Rational quad = o * top_form_evaluate(wedge(wedge(ix, jx), phi) + wedge(wedge(ix, jp), x) +
                                                  wedge(wedge(ip, jx), x));
      CHECK(b(i, j).c1 == Poly(lin));
      CHECK(b(i, j).c2 == Poly(quad));
      // the separate linear display: 3 (e_i _| phi) ^ (e_j _| phi) ^ xi
      CHECK(b(i, j).c1 == Poly(Rational(3) * o * top_form_evaluate(wedge(wedge(ip, jp), x))));
    }
  CHECK_THROWS(bilinear_form_B(lift("e12")));
}

TEST_CASE("metric round trip on random perturbations") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const PF xi = lift(random_three_form(rng));
    const auto b = bilinear_form_B(xi);
    CHECK(is_symmetric<S>(b));
    const auto m = metric_from_B(b);
    CHECK(is_symmetric<Poly>(m.g1));
    CHECK(is_symmetric<Poly>(m.g2));
    check_round_trip(b, m);
  }
}

TEST_CASE("metric_from_B rejects non-perturbative input") {
  SeriesMatrix<Poly> b = bilinear_form_B(PF(3));
  b(0, 0) = S(5);
  CHECK_THROWS_AS(metric_from_B(b), std::domain_error);
  b(0, 0) = S(6);
  b(0, 1) = S(1);
  CHECK_THROWS_AS(metric_from_B(b), std::invalid_argument);
}

TEST_CASE("vol1 vanishes for the 27-dimensional summand") {
  const PF xi = lift(standard_phi() - Rational(7) * F::basis(MultiIndex::of({1, 2, 3})));
  CHECK(metric_from_B(bilinear_form_B(xi)).vol1.is_zero());
  const PF not27 = lift(standard_phi());
  CHECK_FALSE(metric_from_B(bilinear_form_B(not27)).vol1.is_zero());
}

TEST_CASE("Hodge series for the frame metric") {
  const auto m = identity_metric<Poly>();
  const auto s = hodge_star_series(m, lift("e123"));
  CHECK(s.star0 == lift(hodge_star_identity(parse_form("e123"), kG2Orientation)));
  CHECK(s.star1.is_zero());
  CHECK(s.star2.is_zero());
  for (int k = 0; k <= kDim; ++k)
    for (MultiIndex i : basis_indices(k)) {
      const F a = F::basis(i);
      CHECK(hodge_star_series(m, lift(a)).star0 == lift(hodge_star_identity(a, kG2Orientation)));
    }
}

TEST_CASE("Hodge series is an involution modulo t^3") {
  std::mt19937 rng(7);
  const PF xi = lift(random_three_form(rng));
  const HodgeSeries<Poly> h(metric_from_B(bilinear_form_B(xi)));
  for (int k : {2, 3})
    for (MultiIndex i : basis_indices(k)) {
      const PF a = lift(F::basis(i));
      const auto sq = star_twice(h, a);
      CHECK(sq[0] == a);
      CHECK(sq[1].is_zero());
      CHECK(sq[2].is_zero());
    }
}

TEST_CASE("first-order Hodge coefficient reproduces the linearized duality map") {
  const F phi = standard_phi(), psi = standard_psi();
  const std::vector<F> reps{phi, interior_product(1, psi), interior_product(5, psi) - interior_product(2, psi),
                            phi - Rational(7) * F::basis(MultiIndex::of({1, 2, 3})),
                            parse_form("5/9 e467 + 5/27 e137 + 5/27 e126 + 5/27 e234")};
  for (const F& xi : reps) {
    const HodgeSeries<Poly> h(metric_from_B(bilinear_form_B(lift(xi))));
    const PF first = h.apply(lift(phi)).star1 + h.apply(lift(xi)).star0;
    CHECK(first == lift(linearize_theta(xi)));
  }
}

TEST_CASE("Q4 is quadratic and vanishes at zero") {
  CHECK(quadratic_term_Q4(PF(3)).is_zero());
  const PF xi = lift("5/3 e145 + 5/3 e167");
  const PF q = quadratic_term_Q4(xi);
  CHECK_FALSE(q.is_zero());
  CHECK(quadratic_term_Q4(Poly(2) * xi) == Poly(4) * q);
  CHECK(quadratic_term_Q4(Poly(frac(-1, 3)) * xi) == Poly(frac(1, 9)) * q);
  CHECK_THROWS(quadratic_term_Q4(lift("e1234")));
}

TEST_CASE("Q4 is the t^2 coefficient of the full series") {
  const PF xi = lift("5/3 e145 + 5/3 e167 + 2 e246 - e356");
  const HodgeSeries<Poly> h(metric_from_B(bilinear_form_B(xi)));
  const auto sp = h.apply(lift(standard_phi()));
  const auto sx = h.apply(xi);
  // *_t(phi + t xi) expanded to t^2
  CHECK(sp.star0 == lift(standard_psi()));
  CHECK(sp.star2 + sx.star1 == quadratic_term_Q4(xi));
}

TEST_CASE("series pipeline agrees for rational coefficients") {
  const F xi = parse_form("5/3 e145 + 5/3 e167 - e234");
  const auto br = bilinear_form_B(xi);
  const auto bp = bilinear_form_B(lift(xi));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k <= 2; ++k) CHECK(Poly(br(i, j)[k]) == bp(i, j)[k]);
  CHECK(form_cast<Poly>(quadratic_term_Q4(xi)) == quadratic_term_Q4(lift(xi)));
}
