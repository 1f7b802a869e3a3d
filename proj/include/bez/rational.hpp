#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace bez {

// Exact scalars. GMP-backed, expression templates off so that values behave
// like plain value types in generic code.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

// base^e for non-negative integer exponents.
Int pow_int(const Int& base, unsigned long e);

// base^e for possibly negative exponents; rejects 0^negative.
Rat pow_rat(const Rat& base, long e);

// 2^e as an exact rational, e may be negative.
Rat pow2(long e);

// n! with an internally synchronized ascending-product cache.
Int factorial(unsigned long n);

// C(n, k); 0 when k < 0 or k > n.
Int binomial(unsigned long n, long k);

// (2n-1)!! = 1*3*5*...*(2n-1); rejects n < 1.
Int double_factorial_odd(unsigned long n);

// "num/den" with "/den" omitted when den == 1; e.g. "-7/3", "5".
std::string rat_to_string(const Rat& v);

// Inverse of rat_to_string; also accepts non-canonical input like "3/6".
Rat rat_from_string(const std::string& s);

}  // namespace bez
