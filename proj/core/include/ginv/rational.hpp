#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ginv {

// All invariants are exact rationals; GMP keeps them in canonical form
// (gcd(num, den) = 1, den > 0) under arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// base^e for any integer exponent (negative exponents invert; base must be
// nonzero for e < 0).
Rational pow_rational(const Rational &base, long e);

// n^e for e >= 0.
Integer pow_integer(const Integer &n, unsigned long e);

// Canonical "num/den" (or plain "num" when den = 1).
std::string to_string(const Rational &q);

// Parses "num/den" or "num"; canonicalizes; throws ParseError on garbage.
Rational rational_from_string(const std::string &s);

} // namespace ginv
