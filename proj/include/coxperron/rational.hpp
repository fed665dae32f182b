#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coxperron {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational in canonical form (coprime, positive denominator, zero is 0/1).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws PreconditionError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "17", "-3/4", "0.125" or "1e-12" into an exact rational.
/// Throws PreconditionError on malformed input.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering; integers print without "/1".
std::string to_string(const Rational& q);

/// Decimal rendering rounded to `digits` places after the point.
std::string to_decimal(const Rational& q, int digits);

/// -1, 0 or +1.
inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// base^exp for exp >= 0.
Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, unsigned long exp);

}  // namespace coxperron
