#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace divcor {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parse a rational literal: "c/D", an integer, or a terminating decimal
// ("-0.125" -> -1/8).  Throws ConfigError on malformed input.
Rational parse_rational(const std::string& s);

// Exact conversion helpers.
double to_double(const Rational& r);
Integer numer(const Rational& r);
Integer denom(const Rational& r);

} // namespace divcor
