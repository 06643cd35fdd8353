#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace numaxis {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact value of a finite double (every double is a dyadic rational).
Rational exact_rational(double value);

double to_double(const Rational& value);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// Number of bits needed for the larger of numerator and denominator.
std::size_t bit_size(const Rational& value);

}  // namespace numaxis
