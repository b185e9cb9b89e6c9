#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace singularhorn {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "3", "-7/4" or "1.25" into an exact rational. Decimal strings are
/// scaled integers, never binary floats. Throws std::invalid_argument on
/// malformed input.
Rational parse_rational(std::string_view text);

/// Canonical form: "3", "-7/4".
std::string format_rational(const Rational& value);

std::vector<Rational> parse_rational_vector(const std::vector<std::string>& texts);

}  // namespace singularhorn
