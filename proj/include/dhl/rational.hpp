#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dhl/errors.hpp"

namespace dhl {

// Arbitrary-precision exact rational.  Every geometric predicate in this
// library is decided with these; there is no floating-point mode.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "a" or "a/b" with optional sign.  Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

/// Canonical text form: "a" when the denominator is 1, else "a/b" in lowest terms.
std::string to_string(const Rational& value);

/// Decimal rendering for presentation columns only (never used in decisions).
std::string to_decimal(const Rational& value, int significant_digits = 15);

}  // namespace dhl
