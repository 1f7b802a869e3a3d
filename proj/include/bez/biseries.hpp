#pragma once

#include <vector>

#include "bez/poly.hpp"

namespace bez {

// Truncated series in s = t^2 whose coefficients are polynomials in x:
// sum_{n=0..N} term[n](x} * t^{2n}. Order N = number of retained powers of t^2.
class Biseries {
public:
    explicit Biseries(std::vector<RatPoly> terms);

    static Biseries zero(unsigned order);
    static Biseries one(unsigned order);

    unsigned order() const { return static_cast<unsigned>(terms_.size()) - 1; }
    const RatPoly& term(unsigned n) const;
    const std::vector<RatPoly>& terms() const { return terms_; }

    bool operator==(const Biseries& o) const { return terms_ == o.terms_; }

    Biseries operator+(const Biseries& o) const;
    Biseries operator-(const Biseries& o) const;

    // Termwise d/dx.
    Biseries derivative_x() const;

private:
    std::vector<RatPoly> terms_;
};

// Product truncated at the common order.
Biseries biseries_mul(const Biseries& a, const Biseries& b);

// exp(u) truncated at order N; requires u's constant (t^0) term to be the zero
// polynomial. Computed by the E' = u'E coefficient recurrence, which yields
// exactly the truncation of sum_j u^j / j!.
Biseries biseries_exp(const Biseries& u);

// a / b truncated at the common order; requires b's t^0 term to be a nonzero
// constant polynomial.
Biseries biseries_div(const Biseries& a, const Biseries& b);

}  // namespace bez
