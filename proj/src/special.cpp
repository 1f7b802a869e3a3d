#include "bez/special.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "bez/integrate.hpp"

namespace bez {

namespace mp = boost::multiprecision;

namespace {

// Truncation point for the hyperbolic representations: the smallest u with
// x cosh u - g u below -(digits+8) decades, where g bounds the growth of the
// order factor (|nu| for cosh(nu u), 0 for cos(tau u)).
Real hyperbolic_cutoff(const Real& x, const Real& growth, unsigned digits) {
    Real L = Real(digits + 8) * boost::math::constants::ln_ten<Real>();
    Real u = mp::acosh(1 + L / x);
    for (int i = 0; i < 3; ++i) u = mp::acosh(1 + (L + growth * u) / x);
    return u + Real(1) / 2;
}

// Bound on the dropped tail of int_{u_max}^inf e^{-x cosh u + g u} du.
Real hyperbolic_tail(const Real& x, const Real& growth, const Real& u_max) {
    return mp::exp(-x * mp::cosh(u_max) + growth * u_max) / (x * mp::sinh(u_max));
}

// Sum of (-1)^k a(k), a totally monotone, by the Chebyshev-accelerated
// alternating-series scheme; the iteration error shrinks like (3+sqrt(8))^-n.
Real alternating_sum(const std::function<Real(unsigned)>& a, unsigned digits) {
    unsigned n = static_cast<unsigned>(1.31 * digits) + 8;
    Real d = mp::pow(Real(3) + mp::sqrt(Real(8)), static_cast<int>(n));
    d = (d + 1 / d) / 2;
    Real b = -1, c = -d, s = 0;
    for (unsigned k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b = b * (Real(k) + n) * (Real(k) - n) / ((Real(k) + Real(1) / 2) * (Real(k) + 1));
    }
    return s / d;
}

Real series_err(unsigned digits) { return pow10_real(-static_cast<long>(digits) - 4); }

}  // namespace

NumReal bessel_k(const Real& nu, const Real& x, unsigned digits, BesselRoute route) {
    if (x <= 0) throw std::domain_error("bessel_k: requires x > 0");
    PrecisionGuard guard(working_digits_for(digits));
    if (route == BesselRoute::cosh_rep) {
        Real growth = mp::abs(nu);
        Real u_max = hyperbolic_cutoff(x, growth, digits);
        auto f = [&](const Real& u) -> Real {
            return mp::exp(-x * mp::cosh(u)) * mp::cosh(nu * u);
        };
        NumReal r = integrate(f, Real(0), u_max, digits);
        r.err += hyperbolic_tail(x, growth, u_max);
        return r;
    }
    // Single-exp form: the naive product underflows/overflows its two factors
    // separately at the rule's extreme abscissas and can produce 0 * inf.
    auto f = [&](const Real& t) -> Real {
        return mp::exp(-t - x * x / (4 * t) + (-nu - 1) * mp::log(t));
    };
    NumReal r = integrate(f, Real(0), std::numeric_limits<Real>::infinity(), digits);
    Real pre = mp::pow(x / 2, nu) / 2;
    r.value *= pre;
    r.err *= mp::abs(pre);
    return r;
}

NumReal bessel_k_imag(const Real& tau, const Real& x, unsigned digits) {
    if (x <= 0) throw std::domain_error("bessel_k_imag: requires x > 0");
    PrecisionGuard guard(working_digits_for(digits));
    Real u_max = hyperbolic_cutoff(x, Real(0), digits);
    auto f = [&](const Real& u) -> Real {
        return mp::exp(-x * mp::cosh(u)) * mp::cos(tau * u);
    };
    NumReal r = integrate(f, Real(0), u_max, digits);
    r.err += hyperbolic_tail(x, Real(0), u_max);
    return r;
}

NumReal const_catalan(unsigned digits) {
    PrecisionGuard guard(working_digits_for(digits));
    Real g = alternating_sum(
        [](unsigned k) -> Real { return Real(1) / (Real(2 * k + 1) * Real(2 * k + 1)); },
        digits + 4);
    return NumReal{g, series_err(digits)};
}

NumReal const_zeta(const Real& s, unsigned digits) {
    if (s <= 1) throw std::domain_error("const_zeta: requires s > 1");
    PrecisionGuard guard(working_digits_for(digits));
    Real eta = alternating_sum(
        [&](unsigned k) -> Real { return mp::pow(Real(k + 1), -s); }, digits + 4);
    Real scale = 1 - mp::pow(Real(2), 1 - s);
    return NumReal{eta / scale, series_err(digits) / scale};
}

NumReal const_zeta_odd(unsigned m, unsigned digits) {
    return const_zeta(Real(2 * m + 3), digits);
}

NumReal moment_I(unsigned n, unsigned digits) {
    if (n < 1) throw std::invalid_argument("moment_I: requires n >= 1");
    PrecisionGuard guard(working_digits_for(digits));
    Real half_pi = boost::math::constants::half_pi<Real>();
    auto f = [n](const Real& t) -> Real { return mp::pow(t, static_cast<int>(n)) / mp::sin(t); };
    return integrate(f, Real(0), half_pi, digits);
}

NumReal moment_M(unsigned n, unsigned digits) {
    if (n < 2) throw std::invalid_argument("moment_M: requires n >= 2");
    PrecisionGuard guard(working_digits_for(digits));
    Real half_pi = boost::math::constants::half_pi<Real>();
    auto f = [n](const Real& t) -> Real {
        Real s = mp::sin(t);
        return mp::pow(t, static_cast<int>(n)) / (s * s);
    };
    return integrate(f, Real(0), half_pi, digits);
}

}  // namespace bez
