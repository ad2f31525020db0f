#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace tverberg {

// Exact scalar type for all geometry.  GMP-backed, always canonical:
// positive denominator, gcd(|num|, den) = 1.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Canonical textual form: "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& value);

// Inverse of to_string.  Accepts an optionally signed integer numerator and
// an optional "/q" suffix; throws std::invalid_argument on anything else
// (including q = 0).
Rational parse_rational(const std::string& text);

}  // namespace tverberg
