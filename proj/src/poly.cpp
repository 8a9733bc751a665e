#include "g2/poly.hpp"

#include <stdexcept>

namespace g2 {

namespace {

constexpr std::array<const char*, kNumVars> kVarNames = {"v1", "v2", "x1", "x2",
                                                         "x3", "x4", "x5", "x6"};

constexpr int shift(int slot) { return 8 * (kNumVars - 1 - slot); }

}  // namespace

Monomial::Monomial(const std::array<int, kNumVars>& exponents) {
  for (int i = 0; i < kNumVars; ++i) {
    if (exponents[i] < 0 || exponents[i] > 255)
      throw std::out_of_range("monomial exponent out of range");
    bits_ |= static_cast<std::uint64_t>(exponents[i]) << shift(i);
  }
}

Monomial Monomial::of(Var v, int power) {
  std::array<int, kNumVars> e{};
  e[static_cast<int>(v)] = power;
  return Monomial(e);
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < kNumVars; ++i) d += exponent(i);
  return d;
}

std::array<int, kNumVars> Monomial::exponents() const {
  std::array<int, kNumVars> e{};
  for (int i = 0; i < kNumVars; ++i) e[i] = exponent(i);
  return e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) {
    const int e = exponent(i) + other.exponent(i);
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.bits_ |= static_cast<std::uint64_t>(e) << shift(i);
  }
  return r;
}

Poly::Poly(const Rational& c) : Poly(c, Monomial{}) {}

Poly::Poly(const Rational& c, const Monomial& m) {
  if (g2::is_zero(c)) return;
  Rational q = c;
  q.canonicalize();
  terms_.emplace(m, std::move(q));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Poly::constant() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous(int deg) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != deg) return false;
  return true;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (g2::is_zero(it->second)) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
  if (g2::is_zero(rhs)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Rational Poly::evaluate(std::span<const Rational, kNumVars> point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < m.exponent(i); ++k) t *= point[i];
    total += t;
  }
  return total;
}

Poly Poly::derivative(Var v) const {
  const int slot = static_cast<int>(v);
  Poly r;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(slot);
    if (e == 0) continue;
    auto ex = m.exponents();
    --ex[slot];
    r.add_term(Monomial(ex), c * e);
  }
  return r;
}

Poly Poly::substitute(std::span<const Poly, kNumVars> images) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < m.exponent(i); ++k) t *= images[i];
    r += t;
  }
  return r;
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += kVarNames[i];
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  // Highest monomial first reads like the usual lexicographic display.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = sgn(c) < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (m == Monomial{}) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + "*";
      s += to_string(m);
    }
  }
  return s;
}

}  // namespace g2
