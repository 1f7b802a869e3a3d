#include "bez/sheffer.hpp"

#include <functional>
#include <stdexcept>

#include "bez/bernoulli_euler.hpp"

namespace bez {

static IntPoly diff_step(const IntPoly& p) {
    // x^2 p'' + x(1-2x) p' - x p
    IntPoly d1 = p.derivative();
    IntPoly d2 = d1.derivative();
    IntPoly term1 = d2.mul_x().mul_x();
    IntPoly term2 = d1.mul_x() - d1.mul_x().mul_x() * Int(2);
    IntPoly term3 = p.mul_x();
    return term1 + term2 - term3;
}

std::vector<IntPoly> p_table(unsigned n_max, PRoute route) {
    std::vector<IntPoly> t;
    t.reserve(n_max + 1);
    t.push_back(IntPoly::constant(Int(1)));
    switch (route) {
        case PRoute::diff_recurrence:
            for (unsigned n = 0; n < n_max; ++n) t.push_back(diff_step(t[n]));
            break;
        case PRoute::sum_recurrence:
            for (unsigned n = 0; n < n_max; ++n) {
                IntPoly acc;
                for (unsigned k = 0; k <= n; ++k)
                    acc = acc + t[k] * binomial(2 * n + 1, 2 * k);
                t.push_back(-acc.mul_x());
            }
            break;
        case PRoute::explicit_coeffs:
            for (unsigned n = 1; n <= n_max; ++n) {
                std::vector<Int> c(n + 1, Int(0));
                for (unsigned k = 1; k <= n; ++k) c[k] = coeff_a(n, k);
                t.push_back(IntPoly(std::move(c)));
            }
            break;
    }
    return t;
}

IntPoly gen_p(unsigned n, PRoute route) {
    if (route == PRoute::explicit_coeffs && n >= 1) {
        std::vector<Int> c(n + 1, Int(0));
        for (unsigned k = 1; k <= n; ++k) c[k] = coeff_a(n, k);
        return IntPoly(std::move(c));
    }
    return p_table(n, route).back();
}

Int coeff_a(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw std::invalid_argument("coeff_a: requires 1 <= k <= n");
    Rat acc(0);
    for (unsigned r = 0; r <= k; ++r) {
        Rat inner(0);
        for (unsigned j = 0; j <= k - r; ++j) {
            Int base = Int(static_cast<long>(r)) - Int(static_cast<long>(j));
            Rat term = Rat(binomial(k - r, static_cast<long>(j))) * Rat(pow_int(base, 2 * n)) *
                       pow2(-static_cast<long>(j));
            inner += (j % 2 == 0) ? term : -term;
        }
        Rat outer = Rat(binomial(k, static_cast<long>(r))) * pow2(-static_cast<long>(r)) * inner;
        acc += (r % 2 == 0) ? outer : -outer;
    }
    acc /= Rat(factorial(k));
    if (denominator(acc) != 1)
        throw std::runtime_error("coeff_a: internal inconsistency, non-integer coefficient");
    return numerator(acc);
}

std::vector<IntPoly> q_table_from_p(const std::vector<IntPoly>& p) {
    std::vector<IntPoly> q;
    q.reserve(p.size());
    for (const auto& pn : p) {
        IntPoly acc;
        IntPoly d = pn;
        while (!d.is_zero()) {
            acc = acc + d;
            d = d.derivative();
        }
        q.push_back(acc);
    }
    return q;
}

std::vector<IntPoly> q_table(unsigned n_max, QRoute route) {
    switch (route) {
        case QRoute::derivative_sum:
            return q_table_from_p(p_table(n_max));
        case QRoute::euler_convolution: {
            std::vector<IntPoly> p = p_table(n_max);
            std::vector<IntPoly> q;
            q.reserve(n_max + 1);
            for (unsigned n = 0; n <= n_max; ++n) {
                IntPoly acc;
                for (unsigned k = 0; k <= n; ++k)
                    acc = acc + p[k] * (euler_number(2 * (n - k)) * binomial(2 * n, 2 * k));
                q.push_back(acc);
            }
            return q;
        }
        case QRoute::inverse_recurrence: {
            std::vector<IntPoly> p = p_table(n_max);
            std::vector<IntPoly> q;
            q.reserve(n_max + 1);
            for (unsigned n = 0; n <= n_max; ++n) {
                IntPoly acc = p[n];
                for (unsigned k = 0; k < n; ++k)
                    acc = acc - q[k] * binomial(2 * n, 2 * k);
                q.push_back(acc);
            }
            return q;
        }
    }
    throw std::logic_error("q_table: unreachable");
}

IntPoly gen_q(unsigned n, QRoute route) { return q_table(n, route).back(); }

Biseries gf_phi(unsigned N) {
    // exp(-x(cosh t - 1)): the exponent has t^{2n} coefficient -x/(2n)! for n >= 1.
    std::vector<RatPoly> u(N + 1, RatPoly());
    for (unsigned n = 1; n <= N; ++n)
        u[n] = RatPoly({Rat(0), Rat(-1) / Rat(factorial(2 * n))});
    return biseries_exp(Biseries(std::move(u)));
}

Biseries gf_f(unsigned N) { return biseries_div(gf_phi(N), cosh_series(N)); }

static Biseries const_series(unsigned N, const std::function<Rat(unsigned)>& coeff) {
    std::vector<RatPoly> t(N + 1);
    for (unsigned n = 0; n <= N; ++n) t[n] = RatPoly::constant(coeff(n));
    return Biseries(std::move(t));
}

Biseries cosh_series(unsigned N) {
    return const_series(N, [](unsigned n) { return Rat(1) / Rat(factorial(2 * n)); });
}

Biseries sinh_over_t_series(unsigned N) {
    return const_series(N, [](unsigned n) { return Rat(1) / Rat(factorial(2 * n + 1)); });
}

Biseries cosh_half_series(unsigned N) {
    return const_series(N, [](unsigned n) {
        return Rat(1) / (pow_rat(Rat(4), static_cast<long>(n)) * Rat(factorial(2 * n)));
    });
}

Biseries sinh_half_over_t_series(unsigned N) {
    return const_series(N, [](unsigned n) {
        return Rat(1) / (Rat(2) * pow_rat(Rat(4), static_cast<long>(n)) * Rat(factorial(2 * n + 1)));
    });
}

Biseries tanh_over_t_series(unsigned N) {
    return biseries_div(sinh_over_t_series(N), cosh_series(N));
}

Biseries tanh_half_over_t_series(unsigned N) {
    return biseries_div(sinh_half_over_t_series(N), cosh_half_series(N));
}

}  // namespace bez
