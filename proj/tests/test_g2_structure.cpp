#include <random>

#include "doctest.h"
#include "g2/form_parser.hpp"
#include "g2/g2_structure.hpp"

using namespace g2;

namespace {

using F = Form<Rational>;

F e(std::string_view digits) { return F::basis(MultiIndex::parse(digits)); }

F star(const F& a) { return hodge_star_identity(a, kG2Orientation); }

RationalMatrix coefficient_matrix(const std::vector<F>& images, int degree) {
  const auto idx = basis_indices(degree);
  RationalMatrix m(idx.size(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (std::size_t r = 0; r < idx.size(); ++r) m(r, c) = images[c].coefficient(idx[r]);
  return m;
}

Matrix7<Rational> random_sym_traceless(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  Matrix7<Rational> h;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) h(i, j) = h(j, i) = Rational(d(rng));
  Rational tr(0);
  for (int i = 0; i < kDim - 1; ++i) tr += h(i, i);
  h(kDim - 1, kDim - 1) = -tr;
  return h;
}

}  // namespace

TEST_CASE("standard phi and psi") {
  const PhiPsi pp = standard_phi_psi();
  CHECK(pp.phi.coefficient(MultiIndex::of({1, 2, 3})) == 1);
  CHECK(pp.phi.coefficient(MultiIndex::of({3, 5, 6})) == -1);
  CHECK(pp.phi.terms().size() == 7);
  CHECK(form_inner_product(pp.psi, pp.psi) == 7);
  CHECK(form_inner_product(pp.phi, pp.phi) == 7);
  CHECK(pp.psi == hodge_star_identity(pp.phi, kG2Orientation));
  CHECK(wedge(pp.phi, pp.psi) == Rational(7) * volume_form<Rational>(kG2Orientation));
}

TEST_CASE("tensor conversion is antisymmetric and matches coefficients") {
  const G2Tensors t = g2_tensors();
  CHECK(t.phi_at(0, 1, 2) == 1);
  CHECK(t.phi_at(1, 0, 2) == -1);
  CHECK(t.phi_at(2, 4, 5) == -1);
  CHECK(t.phi_at(0, 0, 1) == 0);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        CHECK(t.phi_at(i, j, k) == -t.phi_at(j, i, k));
        CHECK(t.phi_at(i, j, k) == -t.phi_at(i, k, j));
        for (int l = 0; l < kDim; ++l) CHECK(t.psi_at(i, j, k, l) == -t.psi_at(i, j, l, k));
      }
}

TEST_CASE("identity suite passes under the G2 orientation") {
  const CheckList checks = verify_algebraic_identities();
  CHECK(checks.size() == 16);
  for (const Check& c : checks) {
    INFO(c.name << " " << c.counterexample);
    CHECK(c.passed);
  }
}

TEST_CASE("identity suite detects the wrong orientation") {
  const CheckList checks = verify_algebraic_identities(Orientation::positive);
  CHECK_FALSE(all_passed(checks));
  const Check* c = find_check(checks, "contraction.phi_phi_one_index");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  CHECK_FALSE(c->counterexample.empty());
  CHECK(find_check(checks, "contraction.phi_phi_two_index")->passed);
}

TEST_CASE("single-index contraction values") {
  const G2Tensors t = g2_tensors();
  int two = 0, three = 0;
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) {
      two += t.phi_at(0, j, k) * t.phi_at(0, j, k);
      for (int l = 0; l < kDim; ++l) three += t.psi_at(0, j, k, l) * t.psi_at(0, j, k, l);
    }
  CHECK(two == 6);
  CHECK(three == 24);
}

TEST_CASE("two-form projection examples") {
  const F phi = standard_phi();
  const F b = interior_product(1, phi);
  auto s = project_two_form(b);
  CHECK(s.beta7 == b);
  CHECK(s.beta14.is_zero());
  s = project_two_form(e("45") + e("67"));
  CHECK(s.beta7.is_zero());
  CHECK(s.beta14 == e("45") + e("67"));
  s = project_two_form(parse_form("e23 + e45 - e67"));
  CHECK(s.beta14.is_zero());
  CHECK_THROWS(project_two_form(e("123")));
}

TEST_CASE("two-form projectors: eigenvalues, completeness, idempotence, ranks, orthogonality") {
  const F phi = standard_phi();
  std::vector<F> p7, p14;
  const G2Tensors t = g2_tensors();
  for (MultiIndex i : basis_indices(2)) {
    const F beta = F::basis(i);
    const auto s = project_two_form(beta);
    CHECK(s.beta7 + s.beta14 == beta);
    CHECK(star(wedge(phi, s.beta7)) == Rational(2) * s.beta7);
    CHECK(star(wedge(phi, s.beta14)) == -s.beta14);
    CHECK(project_two_form(s.beta7).beta7 == s.beta7);
    CHECK(project_two_form(s.beta14).beta14 == s.beta14);
    const auto b14 = antisymmetric_tensor(s.beta14);
    for (int k = 0; k < kDim; ++k) {
      Rational sum(0);
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) sum += b14[a * kDim + b] * t.phi_at(a, b, k);
      CHECK(sum == 0);
    }
    p7.push_back(s.beta7);
    p14.push_back(s.beta14);
  }
  CHECK(exact_rank(coefficient_matrix(p7, 2)) == 7);
  CHECK(exact_rank(coefficient_matrix(p14, 2)) == 14);
  for (const F& a : p7)
    for (const F& b : p14) CHECK(form_inner_product(a, b) == 0);
}

TEST_CASE("three-form projection examples") {
  const PhiPsi pp = standard_phi_psi();
  auto s = project_three_form(pp.phi);
  CHECK(s.f == 1);
  CHECK(is_zero<Rational>(Matrix7<Rational>(Matrix7<Rational>::Zero())));
  for (int i = 0; i < kDim; ++i) CHECK(s.X(i) == 0);
  CHECK(s.sigma27.is_zero());

  s = project_three_form(interior_product(1, pp.psi));
  CHECK(s.f == 0);
  CHECK(s.X(0) == 1);
  for (int i = 1; i < kDim; ++i) CHECK(s.X(i) == 0);
  CHECK(s.sigma27.is_zero());

  const F sigma = pp.phi - Rational(7) * e("123");
  s = project_three_form(sigma);
  CHECK(s.f == 0);
  for (int i = 0; i < kDim; ++i) CHECK(s.X(i) == 0);
  CHECK(s.sigma27 == sigma);
  CHECK(in_omega3_27(sigma));
  CHECK_THROWS(project_three_form(e("12")));
}

TEST_CASE("three-form projectors: completeness, idempotence, ranks, orthogonality") {
  std::vector<F> p1, p7, p27;
  for (MultiIndex i : basis_indices(3)) {
    const F sigma = F::basis(i);
    const auto s = project_three_form(sigma);
    const F a = omega1_component(s), b = omega7_component(s);
    CHECK(a + b + s.sigma27 == sigma);
    CHECK(in_omega3_27(s.sigma27));
    const auto sa = project_three_form(a), sb = project_three_form(b), sc = project_three_form(s.sigma27);
    CHECK(omega1_component(sa) == a);
    CHECK(omega7_component(sb) == b);
    CHECK(sc.sigma27 == s.sigma27);
    CHECK(omega7_component(sa).is_zero());
    CHECK(sb.sigma27.is_zero());
    CHECK(sc.f == 0);
    p1.push_back(a);
    p7.push_back(b);
    p27.push_back(s.sigma27);
  }
  CHECK(exact_rank(coefficient_matrix(p1, 3)) == 1);
  CHECK(exact_rank(coefficient_matrix(p7, 3)) == 7);
  CHECK(exact_rank(coefficient_matrix(p27, 3)) == 27);
  for (std::size_t x = 0; x < p1.size(); ++x)
    for (std::size_t y = 0; y < p1.size(); ++y) {
      CHECK(form_inner_product(p1[x], p7[y]) == 0);
      CHECK(form_inner_product(p1[x], p27[y]) == 0);
      CHECK(form_inner_product(p7[x], p27[y]) == 0);
    }
}

TEST_CASE("i_phi and its inverse") {
  CHECK(i_phi(SymTraceless<Rational>(Matrix7<Rational>::Zero())).is_zero());
  CHECK(i_phi_unchecked<Rational>(Matrix7<Rational>::Identity()) == Rational(3) * standard_phi());
  CHECK_THROWS(SymTraceless<Rational>(Matrix7<Rational>::Identity()));
  Matrix7<Rational> asym = Matrix7<Rational>::Zero();
  asym(0, 1) = 1;
  CHECK_THROWS(SymTraceless<Rational>(asym));

  Matrix7<Rational> h = Matrix7<Rational>::Zero();
  h(0, 0) = 1;
  h(1, 1) = -1;
  const F eta = i_phi(SymTraceless<Rational>(h));
  // brute-force tensor assembly
  const G2Tensors t = g2_tensors();
  for (MultiIndex idx : basis_indices(3)) {
    const auto l = idx.labels();
    const int i = l[0] - 1, j = l[1] - 1, k = l[2] - 1;
    Rational v(0);
    for (int p = 0; p < kDim; ++p)
      v += h(i, p) * t.phi_at(p, j, k) + h(j, p) * t.phi_at(i, p, k) + h(k, p) * t.phi_at(i, j, p);
    CHECK(eta.coefficient(idx) == v);
  }
  CHECK(in_omega3_27(eta));
  CHECK(i_phi_inverse(eta).matrix() == h);

  Matrix7<Rational> h2 = Matrix7<Rational>::Zero();
  h2(0, 0) = 2;
  h2(1, 1) = -1;
  h2(2, 2) = -1;
  CHECK(i_phi_inverse(i_phi(SymTraceless<Rational>(h2))).matrix() == h2);

  CHECK(i_phi_inverse(F(3)).matrix() == Matrix7<Rational>::Zero());
  CHECK_THROWS(i_phi_inverse(standard_phi()));

  const F ac = standard_phi() - Rational(7) * e("123");
  const auto hc = i_phi_inverse(ac);
  CHECK(i_phi(hc) == ac);
  for (int i = 0; i < 3; ++i) CHECK(hc.matrix()(i, i) == hc.matrix()(0, 0));
  for (int i = 3; i < kDim; ++i) CHECK(hc.matrix()(i, i) == hc.matrix()(3, 3));
  CHECK(hc.matrix()(0, 0) * 3 == hc.matrix()(3, 3) * -4);
  CHECK(hc.matrix()(0, 0) == -2);
}

TEST_CASE("i_phi round trip on random symmetric traceless matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix7<Rational> h = random_sym_traceless(rng);
    const F eta = i_phi(SymTraceless<Rational>(h));
    CHECK(in_omega3_27(eta));
    CHECK(i_phi_inverse(eta).matrix() == h);
    CHECK(i_phi(i_phi_inverse(eta)) == eta);
  }
}

TEST_CASE("linearized Hitchin map") {
  const PhiPsi pp = standard_phi_psi();
  CHECK(linearize_theta(pp.phi) == Rational(4, 3) * pp.psi);
  const F sigma = pp.phi - Rational(7) * e("123");
  CHECK(linearize_theta(sigma) == -star(sigma));
  const F w = interior_product(1, pp.psi);
  CHECK(linearize_theta(w) == star(w));
  CHECK_THROWS(linearize_theta(e("1234")));
}

TEST_CASE("projectors work over polynomial coefficients") {
  const Poly x = Poly::var(Var::x1), v = Poly::var(Var::v1);
  const Form<Poly> sigma = x * form_cast<Poly>(standard_phi()) + v * form_cast<Poly>(e("145") + e("167"));
  const auto s = project_three_form(sigma);
  CHECK(s.f == x);
  CHECK(s.sigma27 == v * form_cast<Poly>(e("145") + e("167")));
  CHECK(in_omega3_27(s.sigma27));
}
