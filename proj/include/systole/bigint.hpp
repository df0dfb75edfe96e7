#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace systole {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q omitted when it is 1.
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

BigInt factorial(unsigned n);

// Zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

// n (n-1) ... (n-k+1); 1 for k == 0.
BigInt falling_factorial(long long n, unsigned k);

}  // namespace systole
