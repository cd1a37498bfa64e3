#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace incidence {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "n" or "n/d" in lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Accepts "n" or "n/d" with an optional leading '-'; throws ParseError.
Rational parse_rational(std::string_view text);

/// Smallest integer k >= 0 with k*k >= r, for r >= 0.
mpz_class ceil_sqrt(const Rational& r);

/// Largest integer <= r.
mpz_class floor_of(const Rational& r);

}  // namespace incidence
