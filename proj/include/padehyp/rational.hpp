#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace padehyp {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) as long as every constructed value is canonicalized, which the
// helpers below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "7", "-4/3", "3.2", "-0.125", "1e-3", "2.5E+2" into an exact rational.
// Decimal inputs are exact: "3.2" is 16/5, never the nearest binary double.
Rational parse_rational(std::string_view text);

// Canonical "num/den" form; integers print without a denominator ("1", "-5").
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);
Rational make_rational(long num, long den);

}  // namespace padehyp
