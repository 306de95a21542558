#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pfaff {

// Exact rationals, always kept in canonical form (gcd 1, positive denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Throws
// ParseError on malformed input or a zero denominator.
Rat parse_rational(std::string_view text);

// Nearest long double (64-bit significand on x86), for values far outside
// the double exponent range as well.
long double to_long_double(const Rat& value);

// log|value|; -infinity for zero.
long double log_abs(const Rat& value);

}  // namespace pfaff
