#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace betadigits {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "n/d" with d omitted when it equals 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Integer lcm(const Integer& a, const Integer& b);

/// Bounds on sqrt(q) for q >= 0, accurate to 2^-bits.
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);

/// Outward conversions of a double into an exact rational.
Rational rational_above(double x);
Rational rational_below(double x);

double to_double(const Rational& q);

}  // namespace betadigits
