#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "mmmcalc/error.hpp"

namespace mmm {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar: always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

// Accepts optional sign, integer or "n/d"; rejects anything else.
Rational parse_rational(std::string_view s);

Int factorial(unsigned n);
Int double_factorial(unsigned n);  // n!! = n(n-2)(n-4)...; 0!! = (-1)!! = 1
Int binomial(long long n, long long k);  // n >= 0; zero outside 0 <= k <= n

// Bernoulli numbers in the convention B_1 = -1/2, i.e. the unique solution of
// sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1 with B_0 = 1.
Rational bernoulli(unsigned k);
std::vector<Rational> bernoulli_upto(unsigned k);  // B_0 .. B_k

}  // namespace mmm
