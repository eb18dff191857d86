#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lensgraph {

/// Arbitrary-precision rational; GMP keeps it canonical (gcd 1, positive
/// denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" with an optional leading '-'. q must be positive.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact 2^exponent for any integer exponent.
Rational pow2(long exponent);

/// Integer power of a rational.
Rational pow(const Rational& base, unsigned long exponent);

} // namespace lensgraph
