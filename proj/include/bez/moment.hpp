#pragma once

#include "bez/poly.hpp"

namespace bez {

// Exact value of the integral over (0, inf) of e^{-c x} p(x) dx / x, i.e.
// sum_{k>=1} a_k (k-1)! / c^k for p = sum a_k x^k. The integral only converges
// when p(0) = 0; a nonzero constant term is rejected, never regularized.
Rat exp_moment_div_x(const RatPoly& p, const Rat& c);

// Exact value of the integral over (0, inf) of e^{-c x} p(x) dx, i.e.
// sum_k a_k k! / c^{k+1}.
Rat exp_moment(const RatPoly& p, const Rat& c);

inline Rat exp_moment_div_x(const IntPoly& p, const Rat& c) {
    return exp_moment_div_x(to_rat_poly(p), c);
}
inline Rat exp_moment(const IntPoly& p, const Rat& c) {
    return exp_moment(to_rat_poly(p), c);
}

}  // namespace bez
