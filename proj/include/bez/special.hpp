#pragma once

#include "bez/numreal.hpp"

namespace bez {

// Two independent integral representations of the modified Bessel function
// K_nu(x): the hyperbolic-cosine form over u with a justified truncation
// point, and the Laplace-type form over t with the (x/2)^nu prefactor. They
// are used to cross-validate each other.
enum class BesselRoute { cosh_rep, laplace_rep };

// K_nu(x) for real order; rejects x <= 0 (the kernel is singular at 0).
NumReal bessel_k(const Real& nu, const Real& x, unsigned digits,
                 BesselRoute route = BesselRoute::cosh_rep);

// K_{i tau}(x): the purely-imaginary-order kernel, real-valued for x > 0,
// via the cosine form of the hyperbolic representation.
NumReal bessel_k_imag(const Real& tau, const Real& x, unsigned digits);

// Catalan's constant by a convergence-accelerated alternating series.
NumReal const_catalan(unsigned digits);

// zeta(s) for real s > 1 via the accelerated alternating eta series.
NumReal const_zeta(const Real& s, unsigned digits);

// zeta(2m + 3): the odd arguments the identity suite talks about.
NumReal const_zeta_odd(unsigned m, unsigned digits);

// I_n = integral of t^n / sin t over (0, pi/2); n >= 1.
NumReal moment_I(unsigned n, unsigned digits);

// M_n = integral of t^n / sin^2 t over (0, pi/2); n >= 2.
NumReal moment_M(unsigned n, unsigned digits);

}  // namespace bez
