#include "g2/obstruction.hpp"

#include <stdexcept>

#include "g2/form_parser.hpp"
#include "g2/g2_structure.hpp"
#include "g2/stable_form_metric.hpp"

namespace g2 {

namespace {

Poly v(Var x) { return Poly::var(x); }

Form<Poly> lift(const Form<Rational>& f) { return form_cast<Poly>(f); }

bool in_doublet(int slot) { return slot >= static_cast<int>(Var::x3); }

// Multiplies every monomial of doublet degree 2 by s2; throws on odd degree.
Poly rescale_doublet(const Poly& p, const Rational& s2) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    int k = 0;
    for (int s = 0; s < kNumVars; ++s)
      if (in_doublet(s)) k += m.exponent(s);
    if (k % 2 != 0) throw std::logic_error("rescale_doublet: odd doublet degree");
    Rational f = 1;
    for (int i = 0; i < k / 2; ++i) f *= s2;
    out += Poly(c * f, m);
  }
  return out;
}

CPoly cconst(long re, long im) { return {Poly(Rational(re)), Poly(Rational(im))}; }

CPolyMatrix3 isotropy_generator(int k) {
  CPolyMatrix3 y{};
  for (auto& row : y)
    for (auto& e : row) e = cconst(0, 0);
  switch (k) {
    case 0:
      y[0][0] = cconst(0, 1);
      y[1][1] = cconst(0, -1);
      break;
    case 1:
      y[0][1] = cconst(1, 0);
      y[1][0] = cconst(-1, 0);
      break;
    case 2:
      y[0][1] = cconst(0, 1);
      y[1][0] = cconst(0, 1);
      break;
    case 3:
      y[0][0] = cconst(0, 1);
      y[1][1] = cconst(0, 1);
      y[2][2] = cconst(0, -2);
      break;
    default:
      throw std::out_of_range("isotropy_generator: index must be 0..3");
  }
  return y;
}

CPolyMatrix3 multiply(const CPolyMatrix3& a, const CPolyMatrix3& b) {
  CPolyMatrix3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

CPoly modulus_squared(const CPoly& z) { return {z.re * z.re + z.im * z.im, Poly()}; }

}  // namespace

Su3Generator parse_generator(std::string_view name) {
  if (name == "C") return Su3Generator::C;
  if (name.size() == 2 && name[0] == 'e' && name[1] >= '1' && name[1] <= '7')
    return static_cast<Su3Generator>(name[1] - '0');
  throw std::invalid_argument("unknown su(3) generator '" + std::string(name) +
                              "' (expected C or e1..e7)");
}

std::string to_string(Su3Generator g) {
  int k = static_cast<int>(g);
  return k == 0 ? "C" : "e" + std::to_string(k);
}

Form<Rational> deformation_map_A(Su3Generator g) {
  switch (g) {
    case Su3Generator::C:
      return standard_phi() - Rational(7) * parse_form("e123", 3);
    case Su3Generator::e1:
      return frac(5, 3) * parse_form("e145 + e167", 3);
    case Su3Generator::e2:
      return frac(5, 3) * parse_form("e245 + e267", 3);
    case Su3Generator::e3:
      return frac(5, 3) * parse_form("e345 + e367", 3);
    case Su3Generator::e4:
      return frac(5, 9) * parse_form("3e467 + e137 + e126 + e234", 3);
    case Su3Generator::e5:
      return frac(5, 9) * parse_form("3e567 + e235 - e136 + e127", 3);
    case Su3Generator::e6:
      return frac(5, 9) * parse_form("3e456 - e236 - e135 + e124", 3);
    case Su3Generator::e7:
      return frac(5, 9) * parse_form("3e457 - e237 + e125 + e134", 3);
  }
  throw std::invalid_argument("deformation_map_A: unknown generator");
}

std::string to_string(XiDictionary d) { return d == XiDictionary::literal ? "literal" : "equivariant"; }

Form<Poly> xi_alpha(XiDictionary d) {
  auto A = [](Su3Generator g) { return lift(deformation_map_A(g)); };
  const Poly half = Poly(frac(1, 2));
  const Poly plus = half * (v(Var::v1) + v(Var::v2));
  const Poly minus = half * (v(Var::v1) - v(Var::v2));
  const Var xs[] = {Var::x1, Var::x2, Var::x3, Var::x4, Var::x5, Var::x6};

  Form<Poly> xi = plus * A(Su3Generator::C);
  if (d == XiDictionary::literal) {
    xi = xi + minus * A(Su3Generator::e1);
    for (int i = 0; i < 6; ++i) xi = xi + v(xs[i]) * A(static_cast<Su3Generator>(i + 2));
  } else {
    xi = xi - minus * A(Su3Generator::e1);
    xi = xi + v(Var::x1) * A(Su3Generator::e2) - v(Var::x2) * A(Su3Generator::e3);
    for (int i = 2; i < 6; ++i) xi = xi + v(xs[i]) * A(static_cast<Su3Generator>(i + 2));
  }
  return xi;
}

Poly cubic_pairing(const Form<Poly>& xi) {
  const Form<Poly> q4 = quadratic_term_Q4(xi);
  return form_inner_product(hodge_star_identity(q4, kG2Orientation), xi);
}

Poly obstruction_polynomial(XiDictionary d) {
  Poly p = cubic_pairing(xi_alpha(d));
  if (d == XiDictionary::equivariant) p = rescale_doublet(p, frac(9, 10));
  return p;
}

CPolyMatrix3 su3_coordinate_matrix() {
  auto x = [](Var a) { return v(a); };
  const Poly zero;
  CPolyMatrix3 m{};
  m[0][0] = {zero, x(Var::v1)};
  m[0][1] = {x(Var::x1), x(Var::x2)};
  m[0][2] = {x(Var::x3), x(Var::x4)};
  m[1][0] = {-x(Var::x1), x(Var::x2)};
  m[1][1] = {zero, x(Var::v2)};
  m[1][2] = {x(Var::x5), x(Var::x6)};
  m[2][0] = {-x(Var::x3), x(Var::x4)};
  m[2][1] = {-x(Var::x5), x(Var::x6)};
  m[2][2] = {zero, -(x(Var::v1) + x(Var::v2))};
  return m;
}

std::array<Poly, kNumVars> su3_coordinates(const CPolyMatrix3& m) {
  return {m[0][0].im, m[1][1].im, m[0][1].re, m[0][1].im,
          m[0][2].re, m[0][2].im, m[1][2].re, m[1][2].im};
}

std::array<CPoly, 3> z_variables() {
  return {CPoly{v(Var::x2), v(Var::x1)}, CPoly{v(Var::x4), -v(Var::x3)},
          CPoly{v(Var::x6), v(Var::x5)}};
}

Poly i_det_polynomial() {
  const CPolyMatrix3 m = su3_coordinate_matrix();
  const CPoly det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // i (re + i im) = -im + i re
  if (!det.re.is_zero()) throw std::logic_error("i_det_polynomial: det is not imaginary");
  return -det.im;
}

Poly isotropy_derivative(const Poly& p, int generator) {
  const CPolyMatrix3 a = su3_coordinate_matrix();
  const CPolyMatrix3 y = isotropy_generator(generator);
  const CPolyMatrix3 ay = multiply(a, y), ya = multiply(y, a);
  CPolyMatrix3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = ay[i][j] - ya[i][j];
  const auto u = su3_coordinates(c);
  Poly out;
  for (int s = 0; s < kNumVars; ++s) out += p.derivative(static_cast<Var>(s)) * u[s];
  return out;
}

const std::array<Poly, 6>& invariant_cubics() {
  static const std::array<Poly, 6> cubics = [] {
    const Poly v1 = v(Var::v1), v2 = v(Var::v2);
    const auto z = z_variables();
    const Poly n1 = modulus_squared(z[0]).re, n2 = modulus_squared(z[1]).re,
               n3 = modulus_squared(z[2]).re;
    return std::array<Poly, 6>{v1 * v1 * v2 + v2 * v2 * v1, (z[0] * z[1] * z[2]).re,
                               v1 * v1 * v1 + v2 * v2 * v2, (v1 + v2) * n1,
                               v1 * n3 + v2 * n2, v1 * n2 + v2 * n3};
  }();
  return cubics;
}

const std::array<std::string, 6>& invariant_cubic_names() {
  static const std::array<std::string, 6> names{
      "v1^2*v2+v2^2*v1", "Re(z1*z2*z3)",         "v1^3+v2^3",
      "(v1+v2)|z1|^2",   "v1|z3|^2+v2|z2|^2", "v1|z2|^2+v2|z3|^2"};
  return names;
}

CubicDecomposition decompose_cubic(const Poly& p) {
  // Each cubic is identified by one monomial that occurs in no other.
  const std::array<Monomial, 6> keys{
      Monomial({2, 1, 0, 0, 0, 0, 0, 0}), Monomial({0, 0, 0, 1, 0, 1, 0, 1}),
      Monomial({3, 0, 0, 0, 0, 0, 0, 0}), Monomial({1, 0, 2, 0, 0, 0, 0, 0}),
      Monomial({1, 0, 0, 0, 0, 0, 2, 0}), Monomial({1, 0, 0, 0, 2, 0, 0, 0})};
  const auto& cubics = invariant_cubics();
  CubicDecomposition d;
  Poly r = p;
  for (int k = 0; k < 6; ++k) {
    d.coefficients[k] = p.coefficient(keys[k]) / cubics[k].coefficient(keys[k]);
    r -= d.coefficients[k] * cubics[k];
  }
  d.remainder = r;
  return d;
}

Poly reference_polynomial() {
  const std::array<Rational, 6> c{frac(-97, 6), frac(25, 9), frac(-29, 6),
                                  frac(5, 3),   frac(37, 18), frac(31, 9)};
  Poly p;
  for (int k = 0; k < 6; ++k) p += c[k] * invariant_cubics()[k];
  return p;
}

Poly reference_i_det() {
  const auto& m = invariant_cubics();
  return -m[0] + m[3] - m[4] + Rational(2) * m[1];
}

// Sym^3 inner product

const std::array<std::array<Rational, kNumVars>, kNumVars>& Sym3InnerProduct::dual_metric() {
  // g(alpha, alpha) = v1^2 + v2^2 + v1 v2 + sum x_i^2; the dual metric
  // inverts the v-block.
  static const auto g = [] {
    std::array<std::array<Rational, kNumVars>, kNumVars> m{};
    m[0][0] = frac(4, 3);
    m[1][1] = frac(4, 3);
    m[0][1] = frac(-2, 3);
    m[1][0] = frac(-2, 3);
    for (int i = 2; i < kNumVars; ++i) m[i][i] = 1;
    return m;
  }();
  return g;
}

namespace {

constexpr int kTensorSize = kNumVars * kNumVars * kNumVars;
using Tensor3 = std::array<Rational, kTensorSize>;

int tidx(int a, int b, int c) { return (a * kNumVars + b) * kNumVars + c; }

Tensor3 polarize(const Poly& p) {
  if (!p.is_homogeneous(3) && !p.is_zero())
    throw std::invalid_argument("sym3_inner_product: expected a homogeneous cubic");
  Tensor3 t{};
  for (const auto& [m, c] : p.terms()) {
    std::array<int, 3> s{};
    int n = 0;
    for (int a = 0; a < kNumVars; ++a)
      for (int e = 0; e < m.exponent(a); ++e) s[n++] = a;
    std::array<std::array<int, 3>, 6> perms{{{s[0], s[1], s[2]},
                                             {s[0], s[2], s[1]},
                                             {s[1], s[0], s[2]},
                                             {s[1], s[2], s[0]},
                                             {s[2], s[0], s[1]},
                                             {s[2], s[1], s[0]}}};
    // Every ordering receives c/6; repeated orderings accumulate.
    for (const auto& q : perms) t[tidx(q[0], q[1], q[2])] += c / 6;
  }
  return t;
}

Tensor3 raise_slot(const Tensor3& t, int slot) {
  const auto& g = Sym3InnerProduct::dual_metric();
  Tensor3 out{};
  for (int a = 0; a < kNumVars; ++a)
    for (int b = 0; b < kNumVars; ++b)
      for (int c = 0; c < kNumVars; ++c) {
        const Rational& x = t[tidx(a, b, c)];
        if (x == 0) continue;
        for (int d = 0; d < kNumVars; ++d) {
          std::array<int, 3> i{a, b, c};
          const int from = i[slot];
          if (g[from][d] == 0) continue;
          i[slot] = d;
          out[tidx(i[0], i[1], i[2])] += g[from][d] * x;
        }
      }
  return out;
}

}  // namespace

Sym3InnerProduct::Sym3InnerProduct() : scale_(1) {
  const Poly& m1 = invariant_cubics()[0];
  scale_ = frac(1, 3) / raw(m1, m1);
}

Rational Sym3InnerProduct::raw(const Poly& p, const Poly& q) const {
  const Tensor3 a = polarize(p);
  const Tensor3 b = raise_slot(raise_slot(raise_slot(polarize(q), 0), 1), 2);
  Rational s = 0;
  for (int i = 0; i < kTensorSize; ++i)
    if (a[i] != 0) s += a[i] * b[i];
  return s;
}

Rational sym3_inner_product(const Poly& p, const Poly& q) {
  static const Sym3InnerProduct ip;
  return ip(p, q);
}

const std::array<std::pair<int, int>, 6>& norm_table_pairs() {
  static const std::array<std::pair<int, int>, 6> pairs{
      {{0, 0}, {1, 1}, {2, 0}, {3, 3}, {4, 4}, {5, 4}}};
  return pairs;
}

const std::array<Rational, 6>& tabulated_norms() {
  static const std::array<Rational, 6> values{frac(1, 3), frac(2, 3), frac(-1, 4),
                                              Rational(1), frac(4, 3), frac(-1, 3)};
  return values;
}

std::array<Rational, 6> computed_norms() {
  std::array<Rational, 6> out;
  const auto& m = invariant_cubics();
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = norm_table_pairs()[k];
    out[k] = sym3_inner_product(m[i], m[j]);
  }
  return out;
}

Rational tabulated_gram_pairing(const Poly& p, const Poly& q) {
  const CubicDecomposition a = decompose_cubic(p), b = decompose_cubic(q);
  if (!a.remainder.is_zero() || !b.remainder.is_zero())
    throw std::invalid_argument("tabulated_gram_pairing: argument outside the invariant span");
  std::array<std::array<Rational, 6>, 6> gram{};
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = norm_table_pairs()[k];
    gram[i][j] = tabulated_norms()[k];
    gram[j][i] = tabulated_norms()[k];
  }
  Rational s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s += a.coefficients[i] * gram[i][j] * b.coefficients[j];
  return s;
}

Rational obstruction_pairing(XiDictionary d) {
  return sym3_inner_product(obstruction_polynomial(d), i_det_polynomial());
}

std::optional<Rational> uniform_ratio(const Poly& p, const Poly& q) {
  if (q.is_zero()) return std::nullopt;
  const auto& [m0, c0] = *q.terms().begin();
  const Rational lambda = p.coefficient(m0) / c0;
  if (p == lambda * q) return lambda;
  return std::nullopt;
}

}  // namespace g2
