#pragma once

#include <gmpxx.h>

#include <string>

namespace sosgap {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need: certificates
// are meaningless with rounding.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline int sign(const Rational& q) { return sgn(q); }

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Canonical form "p/q", always with an explicit denominator ("3" -> "3/1").
std::string to_slash_string(const Rational& q);

// Decimal rendering with the requested number of fractional digits
// (truncated toward zero). Used for human-readable reports only.
std::string to_decimal_string(const Rational& q, int digits);

double to_double(const Rational& q);

// Best rational approximation with denominator <= max_den, via continued
// fractions. Exact snapshot helper for floating-derived constants.
Rational rational_from_double(double x, long max_den = 1000000000L);

// Smallest-denominator rational in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

Rational pow_rational(const Rational& base, unsigned long exp);

}  // namespace sosgap
