#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rankmod {

// Cardinalities are exact arbitrary-precision integers; n! overflows 64-bit
// already at n = 21. Ratios and bounds live in the base-2 log domain.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigCount factorial(int n);

// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigCount& v);

// Nearest-double value of an exact rational (used only for table output).
double rational_to_double(const Rational& q);

} // namespace rankmod
