#pragma once

#include <array>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "g2/rational.hpp"

namespace g2 {

/// Element a + b sqrt2 + c sqrt5 + d sqrt10 of Q(sqrt2, sqrt5).
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& a) : c_{a, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Surd(int a) : Surd(Rational(a)) {}             // NOLINT(google-explicit-constructor)
  Surd(const Rational& a, const Rational& b, const Rational& c, const Rational& d) : c_{a, b, c, d} {}

  static Surd sqrt2() { return {0, 1, 0, 0}; }
  static Surd sqrt5() { return {0, 0, 1, 0}; }
  static Surd sqrt10() { return {0, 0, 0, 1}; }

  /// Coefficient on 1, sqrt2, sqrt5, sqrt10.
  const Rational& operator[](int k) const { return c_[k]; }
  bool is_rational() const { return g2::is_zero(c_[1]) && g2::is_zero(c_[2]) && g2::is_zero(c_[3]); }
  bool is_zero() const { return is_rational() && g2::is_zero(c_[0]); }

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o) { return *this = *this * o; }
  Surd operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  std::array<Rational, 4> c_{};
};

inline bool is_zero(const Surd& s) { return s.is_zero(); }
std::string to_string(const Surd& s);
inline std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << to_string(s); }

/// Exact complex number over Q(sqrt2, sqrt5).
struct CSurd {
  Surd re, im;

  CSurd() = default;
  CSurd(const Surd& r) : re(r) {}  // NOLINT(google-explicit-constructor)
  CSurd(int r) : re(r) {}          // NOLINT(google-explicit-constructor)
  CSurd(const Surd& r, const Surd& i) : re(r), im(i) {}
  static CSurd i() { return {Surd(0), Surd(1)}; }

  CSurd& operator+=(const CSurd& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CSurd& operator-=(const CSurd& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  CSurd& operator*=(const CSurd& o) { return *this = *this * o; }
  CSurd operator-() const { return {-re, -im}; }
  friend CSurd operator+(CSurd a, const CSurd& b) { return a += b; }
  friend CSurd operator-(CSurd a, const CSurd& b) { return a -= b; }
  friend CSurd operator*(const CSurd& a, const CSurd& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const CSurd&, const CSurd&) = default;
};

inline bool is_zero(const CSurd& z) { return z.re.is_zero() && z.im.is_zero(); }
std::string to_string(const CSurd& z);
inline std::ostream& operator<<(std::ostream& os, const CSurd& z) { return os << to_string(z); }

}  // namespace g2

namespace Eigen {
template <>
struct NumTraits<g2::CSurd> : GenericNumTraits<g2::CSurd> {
  using Real = g2::CSurd;
  using NonInteger = g2::CSurd;
  using Nested = g2::CSurd;
  using Literal = g2::CSurd;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 512
  };
};
}  // namespace Eigen
