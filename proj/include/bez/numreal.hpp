#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "bez/rational.hpp"

namespace bez {

// Variable-precision float; the working precision is the thread's current
// default, managed through PrecisionGuard.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Value plus an absolute error estimate.
struct NumReal {
    Real value{0};
    Real err{0};
};

// Scoped change of the working precision (decimal digits); restores the
// previous setting on destruction.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

unsigned current_digits();

// Working precision for a computation targeting `target_digits` of accuracy:
// the target plus guard digits, but never below the caller's ambient
// precision, so an enclosing high-precision context is respected by nested
// numeric kernels.
unsigned working_digits_for(unsigned target_digits);

Real pi_real();
Real pow10_real(long e);
Real rat_to_real(const Rat& v);

// Decimal rendering showing only digits justified by the error estimate
// (all `prec` digits when err is zero or unknown-nonpositive).
std::string num_to_string(const NumReal& v, unsigned prec);

}  // namespace bez
