#ifndef GOSUM_RATIONAL_HPP
#define GOSUM_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gosum
{

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation; values built from text are
// canonicalized by parse_rational.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &r);

bool is_integer(const Rational &r);

// True for 0, -1, -2, ...
bool is_nonpositive_integer(const Rational &r);

Rational pow(const Rational &base, std::int64_t exponent);

// n (n-1) ... (n-m+1); the empty product is 1.
Rational falling_factorial(const Rational &n, unsigned m);

// a (a+1) ... (a+m-1); the empty product is 1.
Rational rising_factorial(const Rational &a, unsigned m);

Integer factorial(unsigned n);

Integer binomial(unsigned n, unsigned k);

} // namespace gosum

#endif
