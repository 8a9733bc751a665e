#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>

#include "g2/rational.hpp"

namespace g2 {

/// Indeterminates of the obstruction computation, in storage order.
enum class Var : std::uint8_t { v1 = 0, v2, x1, x2, x3, x4, x5, x6 };

inline constexpr int kNumVars = 8;

/// Exponent vector over (v1, v2, x1, ..., x6), packed one byte per slot with
/// v1 in the most significant byte so that integer order is lexicographic.
class Monomial {
 public:
  constexpr Monomial() = default;
  explicit Monomial(const std::array<int, kNumVars>& exponents);
  static Monomial of(Var v, int power = 1);

  int exponent(Var v) const { return exponent(static_cast<int>(v)); }
  int exponent(int slot) const {
    return static_cast<int>((bits_ >> (8 * (kNumVars - 1 - slot))) & 0xffu);
  }
  int degree() const;
  std::array<int, kNumVars> exponents() const;

  /// Throws std::overflow_error if any exponent would exceed 255.
  Monomial operator*(const Monomial& other) const;

  std::uint64_t bits() const { return bits_; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Sparse multivariate polynomial over the rationals. No zero coefficient is
/// ever stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c, const Monomial& m);
  static Poly var(Var v) { return Poly(Rational(1), Monomial::of(v)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant() const;
  Rational coefficient(const Monomial& m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int deg) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& b) { return a *= b; }
  friend Poly operator*(const Rational& a, Poly b) { return b *= a; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Substitutes a rational value for every variable.
  Rational evaluate(std::span<const Rational, kNumVars> point) const;
  Poly derivative(Var v) const;
  /// Replaces each variable by a polynomial.
  Poly substitute(std::span<const Poly, kNumVars> images) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

std::string to_string(const Monomial& m);
/// Deterministic rendering, e.g. "-97/6*v1^2*v2 + 3*x1".
std::string to_string(const Poly& p);

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace g2
