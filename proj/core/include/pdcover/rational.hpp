#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pdcover {

// Exact rational arithmetic. Dual raising decides tightness by exact
// equality, so costs and dual values are never stored as floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical text form: "num/den" with den > 0, or "num" when den == 1.
std::string format_rational(const Rational& r);

// Accepts "num", "num/den", and an optional leading '-'. Throws
// InputDomainError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace pdcover
