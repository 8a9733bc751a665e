#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "g2/poly.hpp"
#include "g2/rational.hpp"

namespace g2 {

/// Truncated power series c0 + c1 t + c2 t^2 in the deformation parameter t.
/// Products are exact modulo t^3; nothing of order t^3 is ever stored.
template <class C = Poly>
struct TSeries {
  C c0{}, c1{}, c2{};

  TSeries() = default;
  TSeries(const C& a0) : c0(a0) {}  // NOLINT(google-explicit-constructor)
  TSeries(int a0) : c0(Rational(a0)) {}  // NOLINT(google-explicit-constructor)
  TSeries(const C& a0, const C& a1, const C& a2) : c0(a0), c1(a1), c2(a2) {}

  const C& operator[](int k) const {
    switch (k) {
      case 0: return c0;
      case 1: return c1;
      case 2: return c2;
    }
    throw std::out_of_range("series order must be 0, 1 or 2");
  }

  TSeries& operator+=(const TSeries& o) {
    c0 += o.c0;
    c1 += o.c1;
    c2 += o.c2;
    return *this;
  }
  TSeries& operator-=(const TSeries& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    c2 -= o.c2;
    return *this;
  }
  TSeries& operator*=(const TSeries& o) { return *this = *this * o; }
  TSeries operator-() const { return {-c0, -c1, -c2}; }

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b) {
    return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
  }
  friend TSeries operator*(const Rational& r, const TSeries& a) {
    return {C(a.c0 * r), C(a.c1 * r), C(a.c2 * r)};
  }
  friend TSeries operator*(const TSeries& a, const Rational& r) { return r * a; }
  friend bool operator==(const TSeries&, const TSeries&) = default;
};

template <class C>
bool is_zero(const TSeries<C>& s) {
  return is_zero(s.c0) && is_zero(s.c1) && is_zero(s.c2);
}

/// s^r for s = 1 + s1 t + s2 t^2 via the binomial series:
/// 1 + r s1 t + (r s2 + r(r-1)/2 s1^2) t^2.
template <class C>
TSeries<C> series_fractional_power(const TSeries<C>& s, const Rational& r) {
  if (!(s.c0 == C(Rational(1))))
    throw std::domain_error("series_fractional_power: constant term must be 1");
  const Rational half_binom = r * (r - 1) / 2;
  return {C(Rational(1)), C(s.c1 * r), C(s.c2 * r + (s.c1 * s.c1) * half_binom)};
}

template <class C>
std::string to_string(const TSeries<C>& s) {
  using g2::to_string;
  return "(" + to_string(s.c0) + ") + (" + to_string(s.c1) + ")*t + (" + to_string(s.c2) +
         ")*t^2";
}

template <class C>
std::ostream& operator<<(std::ostream& os, const TSeries<C>& s) {
  return os << to_string(s);
}

}  // namespace g2
