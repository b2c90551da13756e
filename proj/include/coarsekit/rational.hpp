#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coarsekit {

/// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" or "p"; throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace coarsekit
