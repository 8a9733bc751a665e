#include "g2/g2_structure.hpp"

#include <functional>

#include "g2/form_parser.hpp"

namespace g2 {

PhiPsi standard_phi_psi(Orientation o) {
  Form<Rational> phi = parse_form("e123 + e145 - e167 + e246 + e257 + e347 - e356");
  Form<Rational> psi = hodge_star_identity(phi, o);
  return {std::move(phi), std::move(psi)};
}

G2Tensors g2_tensors(Orientation o) {
  const PhiPsi pp = standard_phi_psi(o);
  G2Tensors t;
  for (const Rational& c : antisymmetric_tensor(pp.phi)) t.phi.push_back(static_cast<int>(c.get_num().get_si()));
  for (const Rational& c : antisymmetric_tensor(pp.psi)) t.psi.push_back(static_cast<int>(c.get_num().get_si()));
  return t;
}

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

/// Runs fn over all index tuples of the given arity; fn returns (lhs, rhs).
Check tensor_identity(const std::string& name, const std::string& letters,
                      const std::function<std::pair<int, int>(const std::array<int, 5>&)>& fn) {
  Check c{name, true, "", ""};
  const int arity = static_cast<int>(letters.size());
  std::array<int, 5> idx{};
  long tuples = 0;
  int total = 1;
  for (int a = 0; a < arity; ++a) total *= kDim;
  for (int flat = 0; flat < total; ++flat) {
    int rem = flat;
    for (int a = arity - 1; a >= 0; --a) {
      idx[a] = rem % kDim;
      rem /= kDim;
    }
    const auto [lhs, rhs] = fn(idx);
    ++tuples;
    if (lhs != rhs && c.passed) {
      c.passed = false;
      std::string where;
      for (int a = 0; a < arity; ++a) where += std::string(a ? " " : "") + letters[a] + "=" + std::to_string(idx[a] + 1);
      c.counterexample = where + ": lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
    }
  }
  c.value = std::to_string(tuples) + " index tuples";
  return c;
}

Check form_identity(const std::string& name, const std::vector<std::pair<std::string, std::pair<Form<Rational>, Form<Rational>>>>& cases) {
  Check c{name, true, std::to_string(cases.size()) + " cases", ""};
  for (const auto& [label, sides] : cases) {
    if (!(sides.first == sides.second)) {
      c.passed = false;
      c.counterexample = label + ": lhs=" + to_string(sides.first) + " rhs=" + to_string(sides.second);
      break;
    }
  }
  return c;
}

}  // namespace

CheckList verify_algebraic_identities(Orientation o) {
  const G2Tensors t = g2_tensors(o);
  const auto phi = [&](int i, int j, int k) { return t.phi_at(i, j, k); };
  const auto psi = [&](int i, int j, int k, int l) { return t.psi_at(i, j, k, l); };
  CheckList out;

  out.push_back(tensor_identity("contraction.phi_phi_one_index", "ijab", [&](const auto& x) {
    const int i = x[0], j = x[1], a = x[2], b = x[3];
    int lhs = 0;
    for (int k = 0; k < kDim; ++k) lhs += phi(i, j, k) * phi(a, b, k);
    return std::pair{lhs, delta(i, a) * delta(j, b) - delta(i, b) * delta(j, a) + psi(i, j, a, b)};
  }));
  out.push_back(tensor_identity("contraction.phi_phi_two_index", "ia", [&](const auto& x) {
    const int i = x[0], a = x[1];
    int lhs = 0;
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) lhs += phi(i, j, k) * phi(a, j, k);
    return std::pair{lhs, 6 * delta(i, a)};
  }));
  out.push_back(tensor_identity("contraction.phi_psi_one_index", "ijabc", [&](const auto& x) {
    const int i = x[0], j = x[1], a = x[2], b = x[3], cc = x[4];
    int lhs = 0;
    for (int k = 0; k < kDim; ++k) lhs += phi(i, j, k) * psi(a, b, cc, k);
    const int rhs = delta(j, a) * phi(i, b, cc) + delta(j, b) * phi(a, i, cc) + delta(j, cc) * phi(a, b, i) -
                    delta(i, a) * phi(j, b, cc) - delta(i, b) * phi(a, j, cc) - delta(i, cc) * phi(a, b, j);
    return std::pair{lhs, rhs};
  }));
  out.push_back(tensor_identity("contraction.phi_psi_two_index", "iab", [&](const auto& x) {
    const int i = x[0], a = x[1], b = x[2];
    int lhs = 0;
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) lhs += phi(i, j, k) * psi(a, b, j, k);
    return std::pair{lhs, 4 * phi(i, a, b)};
  }));
  out.push_back(tensor_identity("contraction.psi_psi_two_index", "ijab", [&](const auto& x) {
    const int i = x[0], j = x[1], a = x[2], b = x[3];
    int lhs = 0;
    for (int k = 0; k < kDim; ++k)
      for (int l = 0; l < kDim; ++l) lhs += psi(i, j, k, l) * psi(a, b, k, l);
    return std::pair{lhs, 4 * delta(i, a) * delta(j, b) - 4 * delta(i, b) * delta(j, a) + 2 * psi(i, j, a, b)};
  }));
  out.push_back(tensor_identity("contraction.psi_psi_three_index", "ia", [&](const auto& x) {
    const int i = x[0], a = x[1];
    int lhs = 0;
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) lhs += psi(i, j, k, l) * psi(a, j, k, l);
    return std::pair{lhs, 24 * delta(i, a)};
  }));

  using F = Form<Rational>;
  using Cases = std::vector<std::pair<std::string, std::pair<F, F>>>;
  const PhiPsi pp = standard_phi_psi(o);
  const auto star = [o](const F& a) { return hodge_star_identity(a, o); };
  const auto e = [](int m) { return F::basis(MultiIndex::from_mask(static_cast<std::uint8_t>(1u << (m - 1)))); };

  Cases star_interior, star_wedge;
  for (int k = 0; k <= kDim; ++k)
    for (MultiIndex index : basis_indices(k)) {
      const F alpha = F::basis(index);
      const Rational s1 = (k + 1) % 2 ? -1 : 1, s2 = k % 2 ? -1 : 1;
      for (int m = 1; m <= kDim; ++m) {
        const std::string label = "w=e" + std::to_string(m) + " alpha=" + to_string(index);
        if (k >= 1) star_interior.push_back({label, {star(interior_product(m, alpha)), s1 * wedge(e(m), star(alpha))}});
        if (k <= kDim - 1) star_wedge.push_back({label, {star(wedge(e(m), alpha)), s2 * interior_product(m, star(alpha))}});
      }
    }
  out.push_back(form_identity("hodge.star_of_interior", star_interior));
  out.push_back(form_identity("hodge.star_of_wedge", star_wedge));

  Cases c3, c4, c5, c6, c7, c8, c9, c10;
  for (int m = 1; m <= kDim; ++m) {
    const std::string label = "m=" + std::to_string(m);
    const F alpha = e(m);
    c3.push_back({label, {star(wedge(pp.phi, star(wedge(pp.phi, alpha)))), Rational(-4) * alpha}});
    c4.push_back({label, {wedge(pp.psi, star(wedge(pp.phi, alpha))), F(7)}});
    c5.push_back({label, {star(wedge(pp.psi, star(wedge(pp.psi, alpha)))), Rational(3) * alpha}});
    c6.push_back({label, {wedge(pp.phi, star(wedge(pp.psi, alpha))), Rational(2) * wedge(pp.psi, alpha)}});
    const F w_psi = interior_product(m, pp.psi), w_phi = interior_product(m, pp.phi);
    c7.push_back({label, {wedge(pp.phi, w_psi), Rational(-4) * star(alpha)}});
    c8.push_back({label, {wedge(pp.psi, w_psi), F(7)}});
    c9.push_back({label, {wedge(pp.psi, w_phi), Rational(3) * star(alpha)}});
    c10.push_back({label, {wedge(pp.phi, w_phi), Rational(2) * star(w_phi)}});
  }
  out.push_back(form_identity("one_form.phi_star_phi", c3));
  out.push_back(form_identity("one_form.psi_star_phi", c4));
  out.push_back(form_identity("one_form.psi_star_psi", c5));
  out.push_back(form_identity("one_form.phi_star_psi", c6));
  out.push_back(form_identity("vector.phi_interior_psi", c7));
  out.push_back(form_identity("vector.psi_interior_psi", c8));
  out.push_back(form_identity("vector.psi_interior_phi", c9));
  out.push_back(form_identity("vector.phi_interior_phi", c10));
  return out;
}

}  // namespace g2
