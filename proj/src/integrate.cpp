#include "bez/integrate.hpp"

#include <map>
#include <memory>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/fpclassify.hpp>

namespace bez {

namespace {

using TanhSinh = boost::math::quadrature::tanh_sinh<Real>;
using ExpSinh = boost::math::quadrature::exp_sinh<Real>;

// Node tables depend on the working precision, so engines are cached per
// digit count and only ever used at the precision they were built for.
TanhSinh& tanh_sinh_for(unsigned digits) {
    thread_local std::map<unsigned, std::unique_ptr<TanhSinh>> cache;
    auto& slot = cache[digits];
    // The default min_complement underflows the level estimator for this
    // backend; a fixed tiny-but-representable complement keeps abscissas
    // meaningful down to 1e-400 from either endpoint.
    if (!slot) slot = std::make_unique<TanhSinh>(15, Real("1e-400"));
    return *slot;
}

ExpSinh& exp_sinh_for(unsigned digits) {
    thread_local std::map<unsigned, std::unique_ptr<ExpSinh>> cache;
    auto& slot = cache[digits];
    if (!slot) slot = std::make_unique<ExpSinh>(12);
    return *slot;
}

NumReal check_result(const Real& value, const Real& err, const Real& l1, const Real& tol,
                     const char* what) {
    if (!boost::math::isfinite(value))
        throw QuadratureError(std::string(what) + ": non-finite result");
    if (!(err <= tol * l1))
        throw QuadratureError(std::string(what) + ": did not reach target accuracy (err=" +
                              err.str(3) + ", scale=" + l1.str(3) + ")");
    return NumReal{value, err};
}

// The rules abort with their own exception types when an abscissa produces a
// non-finite value; fold those into the single documented error type.
template <class Run>
Real run_rule(const Run& run, const char* what) {
    try {
        return run();
    } catch (const QuadratureError&) {
        throw;
    } catch (const std::exception& e) {
        throw QuadratureError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

NumReal integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                  unsigned digits) {
    PrecisionGuard guard(working_digits_for(digits));
    Real tol = pow10_real(-static_cast<long>(digits));
    Real err = 0, l1 = 0;
    Real value;
    if (boost::math::isinf(b)) {
        value = run_rule(
            [&]() -> Real { return exp_sinh_for(current_digits()).integrate(f, a, b, tol, &err, &l1); },
            "integrate");
    } else {
        value = run_rule(
            [&]() -> Real { return tanh_sinh_for(current_digits()).integrate(f, a, b, tol, &err, &l1); },
            "integrate");
    }
    return check_result(value, err, l1, tol, "integrate");
}

NumReal integrate_endpoint(const std::function<Real(const Real&, const Real&)>& f,
                           const Real& a, const Real& b, unsigned digits) {
    PrecisionGuard guard(working_digits_for(digits));
    if (boost::math::isinf(a) || boost::math::isinf(b))
        throw QuadratureError("integrate_endpoint: interval must be finite");
    Real tol = pow10_real(-static_cast<long>(digits));
    Real err = 0, l1 = 0;
    Real value = run_rule(
        [&]() -> Real { return tanh_sinh_for(current_digits()).integrate(f, a, b, tol, &err, &l1); },
        "integrate_endpoint");
    return check_result(value, err, l1, tol, "integrate_endpoint");
}

}  // namespace bez
