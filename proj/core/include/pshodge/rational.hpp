#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace pshodge {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// "p/q" in lowest terms; integers (including 0) carry no denominator.
std::string to_string(const Rational& r);

/// base^exponent for exponent >= 0.
Rational power(const Rational& base, int exponent);

Rational factorial(int k);
Rational binomial(int n, int k);

/// (2k-1)!! with the convention (-1)!! = 1.
Rational double_factorial_odd(int k);

/// Bernoulli number B_k with B_1 = -1/2.
Rational bernoulli(int k);

}  // namespace pshodge
