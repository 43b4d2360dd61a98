#pragma once

#include <gmpxx.h>

#include <string>

#include "linea/errors.hpp"

namespace linea {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den as a canonical fraction (reduced, positive denominator).
Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// Accepts "p" or "p/q" with q > 0; returns the reduced fraction.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

inline Integer binomial2(const Integer& n) { return n * (n - 1) / 2; }
inline Integer binomial2(long long n) { return binomial2(Integer(static_cast<long>(n))); }

Integer floor_rational(const Rational& value);

bool is_prime(long n);
long euler_phi(long n);

}  // namespace linea
