#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace moduli::numeric {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms; throws DomainError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p" and "p/q". Throws FormatError.
Rational parse_rational(std::string_view text);

Integer power(const Integer& base, unsigned long exponent);
// Negative exponents invert; 0^negative throws DomainError.
Rational power(const Rational& base, long exponent);

double to_double(const Rational& q);

}  // namespace moduli::numeric
