#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace recurselab {

// Exact arbitrary-precision arithmetic throughout; counters and series
// coefficients must never saturate or wrap.
using BigInt = boost::multiprecision::cpp_int;
using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Floor of an exact rational.
inline BigInt rational_floor(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);  // cpp_rational keeps den > 0
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

// Nonnegative remainder of a by positive modulus m, over the rationals.
inline Rational rational_mod(const Rational& a, const Rational& m) {
  Rational q(rational_floor(a / m));
  return a - q * m;
}

}  // namespace recurselab
