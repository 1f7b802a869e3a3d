#include "bez/numreal.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>

namespace bez {

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

unsigned current_digits() { return Real::default_precision(); }

unsigned working_digits_for(unsigned target_digits) {
    return std::max(target_digits + 10, current_digits());
}

Real pi_real() { return boost::math::constants::pi<Real>(); }

Real pow10_real(long e) {
    Real ten(10);
    return boost::multiprecision::pow(ten, static_cast<int>(e));
}

Real rat_to_real(const Rat& v) {
    return Real(numerator(v).str()) / Real(denominator(v).str());
}

std::string num_to_string(const NumReal& v, unsigned prec) {
    if (v.value == 0) return "0";
    unsigned digits = prec;
    if (v.err > 0) {
        Real rel = v.err / boost::multiprecision::abs(v.value);
        if (rel >= 1) {
            digits = 1;
        } else {
            long just = boost::multiprecision::itrunc(-boost::multiprecision::log10(rel));
            digits = static_cast<unsigned>(std::clamp<long>(just, 1, prec));
        }
    }
    return v.value.str(digits);
}

}  // namespace bez
