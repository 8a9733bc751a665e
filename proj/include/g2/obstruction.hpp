#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "g2/form.hpp"
#include "g2/poly.hpp"

namespace g2 {

/// Generators of su(3) as an SU(2) x U(1) representation: C, e1, ..., e7.
enum class Su3Generator { C = 0, e1, e2, e3, e4, e5, e6, e7 };

Su3Generator parse_generator(std::string_view name);
std::string to_string(Su3Generator g);

/// The invariant map su(3) -> Omega^3_27.
Form<Rational> deformation_map_A(Su3Generator g);

/// Coordinate-to-generator dictionary for xi_alpha.
///   literal:     (v1+v2)/2 A(C) + (v1-v2)/2 A(e1) + sum x_i A(e_{i+1})
///   equivariant: (v1+v2)/2 A(C) - (v1-v2)/2 A(e1) + x1 A(e2) - x2 A(e3)
///                + s sum_{i>=3} x_i A(e_{i+1}), s = 3/sqrt(10)
/// The equivariant form is stored with s = 1; s^2 = 9/10 is applied to the
/// cubic, which only contains even powers of x3..x6.
enum class XiDictionary { literal, equivariant };

std::string to_string(XiDictionary d);

Form<Poly> xi_alpha(XiDictionary d = XiDictionary::literal);

/// <*0 Q4(xi), xi> for a 3-form with polynomial coefficients.
Poly cubic_pairing(const Form<Poly>& xi);

/// The cubic P for the given dictionary (doublet rescaling applied for the
/// equivariant one).
Poly obstruction_polynomial(XiDictionary d = XiDictionary::equivariant);

/// Complex polynomial re + i im.
struct CPoly {
  Poly re, im;

  friend CPoly operator+(const CPoly& a, const CPoly& b) { return {a.re + b.re, a.im + b.im}; }
  friend CPoly operator-(const CPoly& a, const CPoly& b) { return {a.re - b.re, a.im - b.im}; }
  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const CPoly&, const CPoly&) = default;
};

using CPolyMatrix3 = std::array<std::array<CPoly, 3>, 3>;

/// h^-1 alpha h in coordinates:
///   [[i v1, x1 + i x2, x3 + i x4], [-x1 + i x2, i v2, x5 + i x6],
///    [-x3 + i x4, -x5 + i x6, -i (v1 + v2)]]
CPolyMatrix3 su3_coordinate_matrix();

/// Reads (v1, v2, x1..x6) back from an anti-Hermitian traceless matrix.
std::array<Poly, kNumVars> su3_coordinates(const CPolyMatrix3& m);

/// z1 = x2 + i x1, z2 = x4 - i x3, z3 = x6 + i x5.
std::array<CPoly, 3> z_variables();

/// i det of the coordinate matrix (real by construction).
Poly i_det_polynomial();

/// Derivative of p along the isotropy generator Y in su(3):
/// sum_a dp/du_a * u_a([alpha, Y]). Generators: 0..2 = I, J, K in the
/// upper-left block, 3 = C = diag(i, i, -2i).
Poly isotropy_derivative(const Poly& p, int generator);

/// The six symmetrized cubics: v1^2v2+v2^2v1, Re(z1z2z3), v1^3+v2^3,
/// (v1+v2)|z1|^2, v1|z3|^2+v2|z2|^2, v1|z2|^2+v2|z3|^2.
const std::array<Poly, 6>& invariant_cubics();
const std::array<std::string, 6>& invariant_cubic_names();

struct CubicDecomposition {
  std::array<Rational, 6> coefficients;
  Poly remainder;  // zero iff p lies in the span
};

CubicDecomposition decompose_cubic(const Poly& p);

/// The displayed cubic P and the displayed i det, assembled from the six
/// cubics.
Poly reference_polynomial();
Poly reference_i_det();

/// Sym^3 inner product induced by g = -(1/12) B on su(3): polarize to
/// symmetric 3-tensors and contract each slot with the dual metric on the
/// coordinate functionals, then scale so |v1^2v2+v2^2v1|^2 = 1/3.
class Sym3InnerProduct {
 public:
  Sym3InnerProduct();
  /// Uncalibrated contraction.
  Rational raw(const Poly& p, const Poly& q) const;
  Rational operator()(const Poly& p, const Poly& q) const { return scale_ * raw(p, q); }
  const Rational& scale() const { return scale_; }
  /// Dual metric on (v1, v2, x1..x6).
  static const std::array<std::array<Rational, kNumVars>, kNumVars>& dual_metric();

 private:
  Rational scale_;
};

Rational sym3_inner_product(const Poly& p, const Poly& q);

/// The six norm-table pairs, in order: (M1,M1), (M2,M2), (M3,M1), (M4,M4),
/// (M5,M5), (M6,M5), and their tabulated values.
const std::array<std::pair<int, int>, 6>& norm_table_pairs();
const std::array<Rational, 6>& tabulated_norms();
std::array<Rational, 6> computed_norms();

/// Pairing obtained by treating the tabulated norms as the only nonzero Gram
/// entries between the six cubics.
Rational tabulated_gram_pairing(const Poly& p, const Poly& q);

/// <P, i det> under the calibrated Sym^3 inner product.
Rational obstruction_pairing(XiDictionary d = XiDictionary::equivariant);

/// If p = lambda q for a single rational lambda, returns lambda.
std::optional<Rational> uniform_ratio(const Poly& p, const Poly& q);

}  // namespace g2
