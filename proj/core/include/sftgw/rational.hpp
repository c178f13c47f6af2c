#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sftgw {

// Exact rational. mpq_class keeps results of arithmetic in lowest terms;
// anything built from a raw numerator/denominator pair goes through
// make_rational so the invariant holds everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "num/den", or just "num" when den == 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

// True when gcd(num, den) == 1 and den > 0.
bool is_canonical(const Rational& r);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Rational inverse_factorial(unsigned n);
Rational pow(const Rational& base, unsigned exp);

}  // namespace sftgw
