#include "g2/homogeneous.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

#include "g2/g2_structure.hpp"

namespace g2 {

LieElement bracket(const LieElement& x, const LieElement& y) {
  return {x.a * y.a - y.a * x.a, x.b * y.b - y.b * x.b};
}

namespace {

template <class M>
CSurd trace_of(const M& m) {
  CSurd t(0);
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Surd real_part(const CSurd& z) {
  if (!z.im.is_zero()) throw std::logic_error("Killing form: imaginary value on anti-Hermitian input");
  return z.re;
}

Matrix3c embed(const Matrix2c& a) {
  Matrix3c m = Matrix3c::Zero();
  m.topLeftCorner<2, 2>() = a;
  return m;
}

}  // namespace

Surd killing_form(const LieElement& x, const LieElement& y) {
  const Matrix3c p = x.a * y.a;
  const Matrix2c q = x.b * y.b;
  return real_part(CSurd(6) * trace_of(p) + CSurd(4) * trace_of(q));
}

Surd normal_metric(const LieElement& x, const LieElement& y) { return Surd(frac(-3, 40)) * killing_form(x, y); }

std::string LieBasis::name(int k) const {
  static const char* names[kFull] = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "I_d", "J_d", "K_d", "C"};
  return names[k];
}

LieBasis aloff_wallach_basis() {
  const CSurd i = CSurd::i();
  Matrix2c I, J, K;
  I << i, 0, 0, -i;
  J << 0, -1, 1, 0;
  K << 0, i, i, 0;
  const CSurd two_thirds(Surd(frac(2, 3)));
  const CSurd r2(Surd::sqrt2());
  const CSurd scale(Surd(0, 0, frac(1, 3), 0));  // sqrt5 / 3

  LieBasis basis;
  auto& e = basis.elements;
  e[0] = {embed(I) * two_thirds, -I};
  e[1] = {embed(J) * two_thirds, -J};
  e[2] = {embed(K) * two_thirds, -K};
  const auto off = [&](int r, int c, const CSurd& upper, const CSurd& lower) {
    Matrix3c m = Matrix3c::Zero();
    m(r, c) = upper * scale;
    m(c, r) = lower * scale;
    return LieElement{m, Matrix2c::Zero()};
  };
  e[3] = off(0, 2, r2, -r2);
  e[4] = off(0, 2, r2 * i, r2 * i);
  e[5] = off(1, 2, r2, -r2);
  e[6] = off(1, 2, r2 * i, r2 * i);
  e[7] = {embed(I), I};
  e[8] = {embed(J), J};
  e[9] = {embed(K), K};
  Matrix3c c = Matrix3c::Zero();
  c(0, 0) = i;
  c(1, 1) = i;
  c(2, 2) = CSurd(-2) * i;
  e[10] = {c, Matrix2c::Zero()};
  return basis;
}

StructureConstants StructureConstants::abelian() {
  Table t;
  for (auto& plane : t)
    for (auto& row : plane) row.fill(Rational(0));
  return StructureConstants(t);
}

StructureConstants structure_constants(const LieBasis& basis) {
  constexpr int n = LieBasis::kFull;
  std::array<Rational, n> inv_norm;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Surd v = killing_form(basis.elements[a], basis.elements[b]);
      if (a < LieBasis::kIsotropyBegin && b < LieBasis::kIsotropyBegin) {
        if (!(Surd(frac(-3, 40)) * v == Surd(a == b ? 1 : 0)))
          throw std::invalid_argument("structure_constants: m basis is not orthonormal under -(3/40) B");
      } else if (a != b && !v.is_zero()) {
        throw std::invalid_argument("structure_constants: basis is not Killing-orthogonal");
      }
      if (a == b) {
        if (!v.is_rational() || is_zero(v[0]))
          throw std::invalid_argument("structure_constants: degenerate Killing norm");
        inv_norm[a] = 1 / v[0];
      }
    }
  StructureConstants::Table t;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const LieElement br = bracket(basis.elements[i], basis.elements[j]);
      LieElement rebuilt;
      for (int k = 0; k < n; ++k) {
        const Surd v = killing_form(br, basis.elements[k]) * Surd(inv_norm[k]);
        if (!v.is_rational()) throw std::invalid_argument("structure_constants: irrational structure constant");
        t[k][i][j] = v[0];
        if (!is_zero(v[0])) rebuilt = rebuilt + CSurd(Surd(v[0])) * basis.elements[k];
      }
      if (!(rebuilt == br)) throw std::invalid_argument("structure_constants: bracket does not close on the basis");
    }
  return StructureConstants(t);
}

// ---------------------------------------------------------------------------

Rational AlgebraForm::coefficient(std::uint16_t mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraForm::add(std::uint16_t mask, const Rational& c) {
  if (std::popcount(static_cast<unsigned>(mask)) != degree_) throw std::invalid_argument("AlgebraForm: degree mismatch");
  if (g2::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (g2::is_zero(it->second)) terms_.erase(it);
  }
}

Rational AlgebraForm::evaluate(const std::vector<int>& slots) const {
  std::uint16_t mask = 0;
  int inversions = 0;
  for (std::size_t a = 0; a < slots.size(); ++a) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << slots[a]);
    if (mask & bit) return Rational(0);
    mask |= bit;
    for (std::size_t b = a + 1; b < slots.size(); ++b) inversions += slots[a] > slots[b];
  }
  const Rational c = coefficient(mask);
  return inversions % 2 ? Rational(-c) : c;
}

AlgebraForm AlgebraForm::extend(const Form<Rational>& f) {
  AlgebraForm out(f.degree());
  for (const auto& [index, c] : f.terms()) out.add(index.mask(), c);
  return out;
}

Form<Rational> AlgebraForm::restrict_to_m() const {
  if (degree_ > kDim) return Form<Rational>(kDim);
  Form<Rational> out(degree_);
  for (const auto& [mask, c] : terms_)
    if (mask < (1u << kDim)) out.add(MultiIndex::from_mask(static_cast<std::uint8_t>(mask)), c);
  return out;
}

bool AlgebraForm::is_horizontal(int reductive_dim) const {
  for (const auto& [mask, c] : terms_)
    if (mask >> reductive_dim) return false;
  return true;
}

AlgebraForm chevalley_eilenberg_d(const StructureConstants& sc, const AlgebraForm& a, BracketConvention conv) {
  constexpr int n = StructureConstants::kFull;
  const int k = a.degree();
  AlgebraForm out(k + 1);
  if (a.is_zero() || k + 1 > n) return out;
  const Rational sign = conv == BracketConvention::standard ? 1 : -1;
  std::vector<int> rest;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k + 1) continue;
    std::vector<int> x;
    for (int b = 0; b < n; ++b)
      if (mask >> b & 1u) x.push_back(b);
    Rational value(0);
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        rest.assign(1, 0);
        for (int q = 0; q <= k; ++q)
          if (q != i && q != j) rest.push_back(x[q]);
        Rational inner(0);
        for (int m = 0; m < n; ++m) {
          const Rational& c = sc(m, x[i], x[j]);
          if (is_zero(c)) continue;
          rest[0] = m;
          inner += c * a.evaluate(rest);
        }
        if ((i + j) % 2) value -= inner;
        else value += inner;
      }
    out.add(static_cast<std::uint16_t>(mask), sign * value);
  }
  return out;
}

Form<Rational> invariant_exterior_derivative(const StructureConstants& sc, const Form<Rational>& a,
                                             BracketConvention conv) {
  return chevalley_eilenberg_d(sc, AlgebraForm::extend(a), conv).restrict_to_m();
}

Form<Rational> isotropy_action(const StructureConstants& sc, int h, const Form<Rational>& a) {
  const AlgebraForm full = AlgebraForm::extend(a);
  Form<Rational> out(a.degree());
  for (MultiIndex index : basis_indices(a.degree())) {
    std::vector<int> slots = index.labels();
    for (int& s : slots) --s;
    Rational value(0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const int keep = slots[s];
      for (int m = 0; m < sc.reductive_dim(); ++m) {
        const Rational& c = sc(m, h, keep);
        if (is_zero(c)) continue;
        slots[s] = m;
        value -= c * full.evaluate(slots);
      }
      slots[s] = keep;
    }
    out.add(index, value);
  }
  return out;
}

std::string to_string(BracketConvention conv) {
  return conv == BracketConvention::standard ? "standard" : "opposite";
}

// ---------------------------------------------------------------------------

CheckList verify_nearly_g2(BracketConvention conv) {
  constexpr int n = LieBasis::kFull;
  CheckList out;
  const LieBasis basis = aloff_wallach_basis();

  Check ortho{"basis.orthonormal", true, "", ""};
  for (int a = 0; a < kDim && ortho.passed; ++a)
    for (int b = 0; b < kDim; ++b) {
      const Surd g = normal_metric(basis.m(a), basis.m(b));
      if (!(g == Surd(a == b ? 1 : 0))) {
        ortho.passed = false;
        ortho.counterexample = "g(" + basis.name(a) + ", " + basis.name(b) + ") = " + to_string(g);
        break;
      }
    }
  ortho.value = "g(e4, e4) = " + to_string(normal_metric(basis.m(3), basis.m(3)));
  out.push_back(ortho);

  Check killing{"basis.killing_orthogonal", true, "", ""};
  for (int a = 0; a < kDim && killing.passed; ++a)
    for (int h = LieBasis::kIsotropyBegin; h < n; ++h) {
      const Surd v = killing_form(basis.m(a), basis.elements[h]);
      if (!v.is_zero()) {
        killing.passed = false;
        killing.counterexample = "B(" + basis.name(a) + ", " + basis.name(h) + ") = " + to_string(v);
        break;
      }
    }
  killing.value = std::to_string(kDim * (n - kDim)) + " pairs";
  out.push_back(killing);

  std::optional<StructureConstants> sc_opt;
  Check closure{"structure.closure", true, "exact reconstruction of all commutators", ""};
  try {
    sc_opt.emplace(structure_constants(basis));
  } catch (const std::invalid_argument& err) {
    closure.passed = false;
    closure.counterexample = err.what();
  }
  out.push_back(closure);
  if (!sc_opt) return out;
  const StructureConstants& sc = *sc_opt;

  Check anti{"structure.antisymmetry", true, std::to_string(n * n * n) + " constants", ""};
  for (int k = 0; k < n && anti.passed; ++k)
    for (int i = 0; i < n && anti.passed; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(sc(k, i, j) + sc(k, j, i))) {
          anti.passed = false;
          anti.counterexample = "k=" + std::to_string(k + 1) + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
          break;
        }
  out.push_back(anti);

  Check jacobi{"structure.jacobi", true, "", ""};
  long tuples = 0;
  for (int i = 0; i < n && jacobi.passed; ++i)
    for (int j = 0; j < n && jacobi.passed; ++j)
      for (int k = 0; k < n && jacobi.passed; ++k)
        for (int q = 0; q < n; ++q) {
          Rational s(0);
          for (int m = 0; m < n; ++m) s += sc(m, i, j) * sc(q, m, k) + sc(m, j, k) * sc(q, m, i) + sc(m, k, i) * sc(q, m, j);
          ++tuples;
          if (!is_zero(s)) {
            jacobi.passed = false;
            jacobi.counterexample = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                                    " k=" + std::to_string(k + 1) + " component " + std::to_string(q + 1);
            break;
          }
        }
  jacobi.value = std::to_string(tuples) + " index tuples";
  out.push_back(jacobi);

  Check reductive{"isotropy.reductive", true, "[h, m] in m for all isotropy generators", ""};
  for (int h = LieBasis::kIsotropyBegin; h < n && reductive.passed; ++h)
    for (int a = 0; a < kDim && reductive.passed; ++a)
      for (int k = LieBasis::kIsotropyBegin; k < n; ++k)
        if (!is_zero(sc(k, h, a))) {
          reductive.passed = false;
          reductive.counterexample = "[" + basis.name(h) + ", " + basis.name(a) + "] has a " + basis.name(k) + " component";
          break;
        }
  out.push_back(reductive);

  const auto d2_check = [&](const std::string& name, int degree) {
    Check c{name, true, "", ""};
    int count = 0;
    for (MultiIndex index : basis_indices(degree)) {
      const AlgebraForm a = AlgebraForm::extend(Form<Rational>::basis(index));
      const AlgebraForm dd = chevalley_eilenberg_d(sc, chevalley_eilenberg_d(sc, a, conv), conv);
      ++count;
      if (!dd.is_zero() && c.passed) {
        c.passed = false;
        c.counterexample = "d(d " + to_string(index) + ") has " + std::to_string(dd.terms().size()) + " nonzero terms";
      }
    }
    c.value = std::to_string(count) + " basis forms";
    return c;
  };
  out.push_back(d2_check("differential.d_squared_one_forms", 1));
  out.push_back(d2_check("differential.d_squared_two_forms", 2));

  const PhiPsi pp = standard_phi_psi();
  const auto invariance = [&](const std::string& name, const Form<Rational>& f) {
    Check c{name, true, "4 isotropy generators", ""};
    for (int h = LieBasis::kIsotropyBegin; h < n; ++h) {
      const Form<Rational> act = isotropy_action(sc, h, f);
      if (!act.is_zero()) {
        c.passed = false;
        c.counterexample = basis.name(h) + " . form = " + to_string(act);
        break;
      }
    }
    return c;
  };
  out.push_back(invariance("isotropy.preserves_phi", pp.phi));
  out.push_back(invariance("isotropy.preserves_psi", pp.psi));

  const AlgebraForm dphi_full = chevalley_eilenberg_d(sc, AlgebraForm::extend(pp.phi), conv);
  const AlgebraForm dpsi_full = chevalley_eilenberg_d(sc, AlgebraForm::extend(pp.psi), conv);
  out.push_back({"differential.horizontal_dphi", dphi_full.is_horizontal(), "no isotropy components",
                 dphi_full.is_horizontal() ? "" : "d phi has components along the isotropy"});
  out.push_back({"differential.horizontal_dpsi", dpsi_full.is_horizontal(), "no isotropy components",
                 dpsi_full.is_horizontal() ? "" : "d psi has components along the isotropy"});

  const Form<Rational> dphi = dphi_full.restrict_to_m();
  const Form<Rational> residual = dphi - Rational(4) * pp.psi;
  out.push_back({"nearly_g2.dphi_equals_4psi", residual.is_zero(), to_string(residual),
                 residual.is_zero() ? "" : "d phi = " + to_string(dphi)});
  const Form<Rational> dpsi = dpsi_full.restrict_to_m();
  out.push_back({"nearly_g2.dpsi_zero", dpsi.is_zero(), to_string(dpsi), dpsi.is_zero() ? "" : "d psi = " + to_string(dpsi)});
  out.push_back({"nearly_g2.convention", true, to_string(conv), ""});
  out.push_back({"nearly_g2.orientation", true, sign_of(kG2Orientation) > 0 ? "positive" : "negative", ""});
  return out;
}

}  // namespace g2
