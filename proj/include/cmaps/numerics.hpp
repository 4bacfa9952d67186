#pragma once

// Exact integer and rational arithmetic. Integer and Rational are GMP values
// (mpq_class is kept canonical by every arithmetic operator).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cmaps {

using Integer = mpz_class;
using Rational = mpq_class;

/// n! for n >= 0.
Integer factorial(long n);

/// n choose k; zero outside 0 <= k <= n. Computed multiplicatively with exact
/// division at every step, so large n with small k stays cheap.
Integer binomial(long n, long k);

/// num/den in lowest terms; throws std::invalid_argument on a zero denominator.
Rational ratio(const Integer& num, const Integer& den);

/// Decimal rendering. Rationals always print as "num/den", integers as "num".
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Parses "123", "-7", "3/4" or "-6/8" (the latter normalised to -3/4).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace cmaps
