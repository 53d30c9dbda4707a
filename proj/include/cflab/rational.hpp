#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cflab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// n!! for n >= -1; (-1)!! = 0!! = 1.
BigInt double_factorial(long n);
BigInt factorial(long n);
BigInt pow10(long e);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and plain decimals such as "-0.25".
Rational parse_rational(std::string_view text);

/// Number of decimal digits of |x| (0 for x == 0).
long decimal_length(const BigInt& x);

/// Smallest t >= 0 with 10^t >= x, for x >= 1.
long ceil_log10(const BigInt& x);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }

}  // namespace cflab
