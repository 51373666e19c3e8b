#pragma once

// Exact integers and rationals. Both are GMP values; Rational is always kept
// canonical (reduced, positive denominator) by construction through
// make_rational and by GMP's own arithmetic.

#include <gmpxx.h>

#include <string>

namespace lcd {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

// Parses "p" or "p/q" in decimal; throws PreconditionError on malformed text.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

bool is_integral(const Rational& v);
bool is_canonical(const Rational& v);

Integer factorial(unsigned long n);
// (2n-1)!! with the convention (-1)!! = 1.
Integer double_factorial_odd(long n);
Integer binomial(long n, long k);
Integer pow_int(const Integer& base, unsigned long exp);
Rational pow_rat(const Rational& base, unsigned long exp);

// Floating rendering for human-facing output only.
double to_double(const Rational& v);
// Decimal rendering truncated toward zero after `digits` fractional digits.
std::string to_decimal(const Rational& v, unsigned digits);

}  // namespace lcd
