#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dcp {

/// Exact rational scalar. Arithmetic results are canonical (positive
/// denominator, lowest terms); the two-argument mpq_class constructor is
/// not, so build fractions with make_rational.
using Rational = mpq_class;

/// num/den in lowest terms; throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den);

/// Parses "p/q" or an integer literal. Decimal or exponent notation is
/// rejected so that parameters stay exact end to end.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always renders "p/q" in lowest terms, including integers ("3/1").
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational abs(const Rational& q);

/// q^k for any integer k; throws std::domain_error for 0^k with k < 0.
Rational pow(const Rational& q, long k);

}  // namespace dcp
