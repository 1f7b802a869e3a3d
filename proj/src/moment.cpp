#include "bez/moment.hpp"

#include <stdexcept>

namespace bez {

Rat exp_moment_div_x(const RatPoly& p, const Rat& c) {
    if (c <= 0) throw std::invalid_argument("exp_moment_div_x: requires c > 0");
    if (p.coeff(0) != 0)
        throw std::invalid_argument("exp_moment_div_x: divergent (nonzero constant term)");
    Rat acc(0);
    Rat ck(1);
    for (int k = 1; k <= p.degree(); ++k) {
        ck *= c;
        acc += p.coeff(static_cast<std::size_t>(k)) * Rat(factorial(static_cast<unsigned>(k) - 1)) / ck;
    }
    return acc;
}

Rat exp_moment(const RatPoly& p, const Rat& c) {
    if (c <= 0) throw std::invalid_argument("exp_moment: requires c > 0");
    Rat acc(0);
    Rat ck = c;
    for (int k = 0; k <= p.degree(); ++k) {
        acc += p.coeff(static_cast<std::size_t>(k)) * Rat(factorial(static_cast<unsigned>(k))) / ck;
        ck *= c;
    }
    return acc;
}

}  // namespace bez
