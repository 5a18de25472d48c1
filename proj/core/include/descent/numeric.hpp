#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/cpp_int_config.hpp>

namespace descent {

// Arbitrary-precision integers and rationals back every computation in this
// library.  Counts grow like 3^n and Ehrhart values like r^n, so fixed-width
// types overflow almost immediately.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// binomial(n, k) for n >= 0; returns 0 when k < 0 or k > n.
Int binomial(long long n, long long k);

// n! for n >= 0.
Int factorial(int n);

}  // namespace descent
