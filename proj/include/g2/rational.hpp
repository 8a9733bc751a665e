#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace g2 {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// n/d in lowest terms (mpq_class(n, d) alone does not reduce).
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace g2
