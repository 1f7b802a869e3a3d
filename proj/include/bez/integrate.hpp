#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "bez/numreal.hpp"

namespace bez {

// Raised when a quadrature rule fails to reach its target accuracy or the
// integrand produced a non-finite value; a bad value is never returned
// silently.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integral of f over (a, b), b possibly +infinity, evaluated at `digits`
// working digits with relative target 10^-digits. Finite intervals use a
// tanh-sinh rule, semi-infinite ones an exp-sinh rule; the error field is the
// rule's absolute error estimate.
NumReal integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                  unsigned digits);

// Same rule, but the integrand also receives the signed distance to the
// nearest endpoint: a - x (nonpositive) on the left half, b - x
// (nonnegative) on the right half. Lets integrands with endpoint
// cancellation or log singularities evaluate accurately from the small
// complement instead of the rounded abscissa. Finite intervals only.
NumReal integrate_endpoint(const std::function<Real(const Real&, const Real&)>& f,
                           const Real& a, const Real& b, unsigned digits);

}  // namespace bez
