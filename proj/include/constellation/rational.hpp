#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace constellation {

// Always kept in lowest terms with a positive denominator by GMP.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using RationalVector = std::vector<Rational>;

// Accepts "p" or "p/q" with an optional leading sign. Throws Error on
// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero_vector(const RationalVector& v);

}  // namespace constellation
