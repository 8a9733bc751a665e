#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "g2/check.hpp"
#include "g2/form.hpp"
#include "g2/matrix.hpp"

namespace g2 {

/// Orientation under which the standard phi is a G2 structure with
/// psi = *phi, B(phi) = +6 I and the contraction identities holding.
inline constexpr Orientation kG2Orientation = Orientation::negative;

struct PhiPsi {
  Form<Rational> phi;
  Form<Rational> psi;
};

/// phi = e123 + e145 - e167 + e246 + e257 + e347 - e356, psi = *phi.
PhiPsi standard_phi_psi(Orientation o = kG2Orientation);

inline const Form<Rational>& standard_phi() {
  static const Form<Rational> phi = standard_phi_psi().phi;
  return phi;
}

inline const Form<Rational>& standard_psi() {
  static const Form<Rational> psi = standard_phi_psi().psi;
  return psi;
}

/// Dense antisymmetric tensor of a k-form, indexed t[i1*7^(k-1) + ... + ik]
/// with 0-based frame indices. No factorial weights.
template <class S>
std::vector<S> antisymmetric_tensor(const Form<S>& f) {
  int size = 1;
  for (int k = 0; k < f.degree(); ++k) size *= kDim;
  std::vector<S> t(size, S(0));
  for (const auto& [index, c] : f.terms()) {
    std::vector<int> labels = index.labels();
    for (int& l : labels) --l;
    do {
      int inversions = 0, flat = 0;
      for (std::size_t a = 0; a < labels.size(); ++a) {
        flat = flat * kDim + labels[a];
        for (std::size_t b = a + 1; b < labels.size(); ++b) inversions += labels[a] > labels[b];
      }
      t[flat] = inversions % 2 ? S(-c) : c;
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  return t;
}

/// phi_{ijk} and psi_{ijkl} with 0-based indices.
struct G2Tensors {
  std::vector<int> phi;  // 7^3
  std::vector<int> psi;  // 7^4

  int phi_at(int i, int j, int k) const { return phi[(i * kDim + j) * kDim + k]; }
  int psi_at(int i, int j, int k, int l) const { return psi[((i * kDim + j) * kDim + k) * kDim + l]; }
};

G2Tensors g2_tensors(Orientation o = kG2Orientation);

/// Exhaustive check of the phi/psi contraction identities and the wedge/star
/// identities for one-forms and vectors, over all frame indices.
CheckList verify_algebraic_identities(Orientation o = kG2Orientation);

template <class S>
struct TwoFormSplit {
  Form<S> beta7;
  Form<S> beta14;
};

/// beta7 = (beta + *(phi ^ beta)) / 3, beta14 = beta - beta7.
template <class S>
TwoFormSplit<S> project_two_form(const Form<S>& beta) {
  if (beta.degree() != 2) throw std::invalid_argument("project_two_form: expected a 2-form");
  const Form<S> phi = form_cast<S>(standard_phi());
  const Form<S> b7 = S(frac(1, 3)) * (beta + hodge_star_identity(wedge(phi, beta), kG2Orientation));
  return {b7, beta - b7};
}

template <class S>
struct ThreeFormSplit {
  S f;
  Vector7<S> X;
  Form<S> sigma27;
};

/// sigma = f phi + X _| psi + sigma27 with f = *(sigma ^ psi)/7, X = *(sigma ^ phi)/4.
template <class S>
ThreeFormSplit<S> project_three_form(const Form<S>& sigma) {
  if (sigma.degree() != 3) throw std::invalid_argument("project_three_form: expected a 3-form");
  const Form<S> phi = form_cast<S>(standard_phi());
  const Form<S> psi = form_cast<S>(standard_psi());
  const Form<S> top = hodge_star_identity(wedge(sigma, psi), kG2Orientation);
  S f = top.coefficient(MultiIndex{}) * S(frac(1, 7));
  const Form<S> x_form = S(frac(1, 4)) * hodge_star_identity(wedge(sigma, phi), kG2Orientation);
  Vector7<S> X = components(x_form);
  Form<S> rest = sigma - f * phi - interior_product(X, psi);
  return {std::move(f), std::move(X), std::move(rest)};
}

template <class S>
Form<S> omega1_component(const ThreeFormSplit<S>& s) {
  return s.f * form_cast<S>(standard_phi());
}

template <class S>
Form<S> omega7_component(const ThreeFormSplit<S>& s) {
  return interior_product(s.X, form_cast<S>(standard_psi()));
}

/// Both wedge tests of the 27-dimensional summand.
template <class S>
bool in_omega3_27(const Form<S>& eta) {
  return eta.degree() == 3 && wedge(eta, form_cast<S>(standard_phi())).is_zero() &&
         wedge(eta, form_cast<S>(standard_psi())).is_zero();
}

/// Symmetric traceless 7x7 matrix.
template <class S>
class SymTraceless {
 public:
  explicit SymTraceless(const Matrix7<S>& h) : h_(h) {
    if (!is_symmetric<S>(h)) throw std::invalid_argument("SymTraceless: matrix is not symmetric");
    S tr(0);
    for (int i = 0; i < kDim; ++i) tr += h(i, i);
    if (!is_zero(tr)) throw std::invalid_argument("SymTraceless: matrix is not traceless");
  }
  const Matrix7<S>& matrix() const { return h_; }
  friend bool operator==(const SymTraceless& a, const SymTraceless& b) { return a.h_ == b.h_; }

 private:
  Matrix7<S> h_;
};

/// eta_ijk = h_ip phi_pjk + h_jp phi_ipk + h_kp phi_ijp on any matrix
/// (no symmetry or trace check).
template <class S>
Form<S> i_phi_unchecked(const Matrix7<S>& h) {
  const G2Tensors& t = []() -> const G2Tensors& {
    static const G2Tensors tensors = g2_tensors();
    return tensors;
  }();
  Form<S> eta(3);
  for (MultiIndex index : basis_indices(3)) {
    const auto l = index.labels();
    const int i = l[0] - 1, j = l[1] - 1, k = l[2] - 1;
    S sum(0);
    for (int p = 0; p < kDim; ++p) {
      if (const int c = t.phi_at(p, j, k)) sum += h(i, p) * S(c);
      if (const int c = t.phi_at(i, p, k)) sum += h(j, p) * S(c);
      if (const int c = t.phi_at(i, j, p)) sum += h(k, p) * S(c);
    }
    eta.add(index, sum);
  }
  return eta;
}

template <class S>
Form<S> i_phi(const SymTraceless<S>& h) {
  return i_phi_unchecked(h.matrix());
}

/// h_ia = eta_ijk phi_ajk / 4 (sum over all j, k); requires eta in the
/// 27-dimensional summand.
template <class S>
SymTraceless<S> i_phi_inverse(const Form<S>& eta) {
  if (!in_omega3_27(eta)) throw std::invalid_argument("i_phi_inverse: form is not in the 27-dimensional summand");
  static const G2Tensors t = g2_tensors();
  const std::vector<S> e = antisymmetric_tensor(eta);
  Matrix7<S> h;
  for (int i = 0; i < kDim; ++i)
    for (int a = 0; a < kDim; ++a) {
      S sum(0);
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          if (const int c = t.phi_at(a, j, k)) sum += e[(i * kDim + j) * kDim + k] * S(c);
      h(i, a) = sum * S(frac(1, 4));
    }
  return SymTraceless<S>(h);
}

/// Linearized Hitchin duality: *((4/3) pi1 xi + pi7 xi - pi27 xi).
template <class S>
Form<S> linearize_theta(const Form<S>& xi) {
  if (xi.degree() != 3) throw std::invalid_argument("linearize_theta: expected a 3-form");
  const ThreeFormSplit<S> s = project_three_form(xi);
  const Form<S> inner = S(frac(4, 3)) * omega1_component(s) + omega7_component(s) - s.sigma27;
  return hodge_star_identity(inner, kG2Orientation);
}

}  // namespace g2
