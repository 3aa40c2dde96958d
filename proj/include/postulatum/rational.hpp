#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace postulatum {

/// Arbitrary-precision rational, always kept in canonical reduced form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `p` or `p/q` (optional leading minus, q > 0). Decimal and
/// exponent forms are rejected so every input stays exact.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: `p` when the denominator is 1, else `p/q`.
std::string to_string(const Rational& r);

/// num / den reduced; gmpxx's two-argument constructor does not reduce.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace postulatum
