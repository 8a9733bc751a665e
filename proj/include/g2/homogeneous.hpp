#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "g2/check.hpp"
#include "g2/form.hpp"
#include "g2/surd.hpp"

namespace g2 {

using Matrix3c = Eigen::Matrix<CSurd, 3, 3>;
using Matrix2c = Eigen::Matrix<CSurd, 2, 2>;

/// Element of su(3) + su(2).
struct LieElement {
  Matrix3c a = Matrix3c::Zero();
  Matrix2c b = Matrix2c::Zero();

  friend LieElement operator+(const LieElement& x, const LieElement& y) { return {x.a + y.a, x.b + y.b}; }
  friend LieElement operator-(const LieElement& x, const LieElement& y) { return {x.a - y.a, x.b - y.b}; }
  friend LieElement operator*(const CSurd& s, const LieElement& x) { return {x.a * s, x.b * s}; }
  friend bool operator==(const LieElement& x, const LieElement& y) { return x.a == y.a && x.b == y.b; }
};

LieElement bracket(const LieElement& x, const LieElement& y);

/// Killing form of su(3) + su(2): 6 tr(X1 Y1) + 4 tr(X2 Y2).
Surd killing_form(const LieElement& x, const LieElement& y);

/// Full basis of su(3) + su(2) adapted to the reductive split:
/// indices 0..6 span m (e1..e7), 7..9 span su(2)_d (I, J, K embedded
/// diagonally), 10 is C = diag(i, i, -2i).
struct LieBasis {
  static constexpr int kFull = 11;
  static constexpr int kIsotropyBegin = 7;
  std::array<LieElement, kFull> elements;

  const LieElement& m(int i) const { return elements[i]; }
  std::string name(int k) const;
};

LieBasis aloff_wallach_basis();

/// Normal metric -(3/40) B on the given elements.
Surd normal_metric(const LieElement& x, const LieElement& y);

/// c[k][i][j]: [E_i, E_j] = sum_k c^k_ij E_k over the full 11-element basis.
class StructureConstants {
 public:
  static constexpr int kFull = LieBasis::kFull;
  using Table = std::array<std::array<std::array<Rational, kFull>, kFull>, kFull>;

  explicit StructureConstants(Table c, int reductive_dim = 7) : c_(std::move(c)), m_dim_(reductive_dim) {}
  static StructureConstants abelian();

  const Rational& operator()(int k, int i, int j) const { return c_[k][i][j]; }
  /// Components of [e_i, e_j] along m only.
  Rational m_projection(int k, int i, int j) const { return k < m_dim_ ? c_[k][i][j] : Rational(0); }
  int reductive_dim() const { return m_dim_; }

 private:
  Table c_;
  int m_dim_;
};

/// Expands commutators by Killing projection onto the (B-orthogonal) basis and
/// verifies the exact reconstruction. Throws if the m-part is not orthonormal
/// under -(3/40) B, the basis is not B-orthogonal, or a coefficient is
/// irrational.
StructureConstants structure_constants(const LieBasis& basis);

/// Sign convention of the invariant differential.
///   standard: (d a)(X0..Xk) = sum_{i<j} (-1)^{i+j} a([Xi, Xj], X0..^i..^j..Xk)
///   opposite: the negative of standard (right-invariant / reversed frame).
enum class BracketConvention { standard, opposite };

/// Constant-coefficient form on the full 11-dimensional algebra, keyed by
/// an 11-bit index mask (bit k <=> basis covector k).
class AlgebraForm {
 public:
  explicit AlgebraForm(int degree = 0) : degree_(degree) {}
  int degree() const { return degree_; }
  const std::map<std::uint16_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(std::uint16_t mask) const;
  void add(std::uint16_t mask, const Rational& c);
  /// Value on basis vectors in the given (not necessarily sorted) order.
  Rational evaluate(const std::vector<int>& slots) const;

  /// m-forms extended by zero to the full algebra.
  static AlgebraForm extend(const Form<Rational>& f);
  /// Restriction to m (components with isotropy slots dropped).
  Form<Rational> restrict_to_m() const;
  /// True if no component has an isotropy slot.
  bool is_horizontal(int reductive_dim = 7) const;

  friend bool operator==(const AlgebraForm&, const AlgebraForm&) = default;

 private:
  int degree_;
  std::map<std::uint16_t, Rational> terms_;
};

/// Chevalley-Eilenberg differential on the full algebra.
AlgebraForm chevalley_eilenberg_d(const StructureConstants& sc, const AlgebraForm& a,
                             BracketConvention conv = BracketConvention::opposite);

/// Invariant exterior derivative on the reductive complement: the restriction
/// of the full differential applied to the extension by zero.
Form<Rational> invariant_exterior_derivative(const StructureConstants& sc, const Form<Rational>& a,
                                             BracketConvention conv = BracketConvention::opposite);

/// Action of an algebra element h (index into the full basis) on an m-form:
/// (h . a)(X1..Xk) = -sum_s a(X1, .., [h, Xs]_m, .., Xk).
Form<Rational> isotropy_action(const StructureConstants& sc, int h, const Form<Rational>& a);

/// Basis orthonormality, Killing orthogonality, structure-constant axioms,
/// d^2 = 0, isotropy invariance, dphi = 4 psi and dpsi = 0.
CheckList verify_nearly_g2(BracketConvention conv = BracketConvention::opposite);

std::string to_string(BracketConvention conv);

}  // namespace g2
