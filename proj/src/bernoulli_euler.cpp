#include "bez/bernoulli_euler.hpp"

#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "bez/moment.hpp"
#include "bez/sheffer.hpp"

namespace bez {

Rat bernoulli_number(unsigned n) {
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    while (cache.size() <= n) {
        // sum_{k=0}^{m} C(m+1,k) B_k = 0 solved for B_m.
        unsigned m_new = static_cast<unsigned>(cache.size());
        Rat acc(0);
        for (unsigned k = 0; k < m_new; ++k)
            acc += Rat(binomial(m_new + 1, static_cast<long>(k))) * cache[k];
        cache.push_back(-acc / Rat(static_cast<long>(m_new) + 1));
    }
    return cache[n];
}

RatPoly bernoulli_poly(unsigned n) {
    std::vector<Rat> c(n + 1, Rat(0));
    for (unsigned k = 0; k <= n; ++k)
        c[n - k] = Rat(binomial(n, static_cast<long>(k))) * bernoulli_number(k);
    return RatPoly(std::move(c));
}

Int euler_number(unsigned n) {
    if (n % 2 == 1) return Int(0);
    static std::vector<Int> cache{Int(1)};  // cache[m] = E_{2m}
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    unsigned m = n / 2;
    while (cache.size() <= m) {
        unsigned m_new = static_cast<unsigned>(cache.size());
        Int acc(0);
        for (unsigned k = 0; k < m_new; ++k)
            acc += binomial(2 * m_new, static_cast<long>(2 * k)) * cache[k];
        cache.push_back(-acc);
    }
    return cache[m];
}

// The shared inner double sum of the explicit formulas:
// s(n,k) = sum_r (-1)^r 2^{-r} C(k,r) sum_j (-1)^j 2^{-j} C(k-r,j) (r-j)^{2n},
// which equals k! * a_{n,k}.
static Rat explicit_inner_sum(unsigned n, unsigned k) {
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
    return acc;
}

Rat bernoulli_via_moment(unsigned n, BVariant variant) {
    if (n < 1) throw std::invalid_argument("bernoulli_via_moment: requires n >= 1");
    switch (variant) {
        case BVariant::eq2_13:
            return Rat(static_cast<long>(n)) / (Rat(1) - pow2(2 * n)) *
                   exp_moment_div_x(gen_p(n), Rat(2));
        case BVariant::eq2_37:
            return Rat(2 * static_cast<long>(n)) / (pow2(2 * n) - pow2(4 * n)) *
                   exp_moment_div_x(gen_p(n), Rat(1));
        case BVariant::explicit_2_39: {
            Rat acc(0);
            for (unsigned k = 1; k <= n; ++k)
                acc += explicit_inner_sum(n, k) / (pow2(k) * Rat(static_cast<long>(k)));
            return Rat(static_cast<long>(n)) / (Rat(1) - pow2(2 * n)) * acc;
        }
        case BVariant::explicit_2_40: {
            Rat acc(0);
            for (unsigned k = 1; k <= n; ++k)
                acc += explicit_inner_sum(n, k) / Rat(static_cast<long>(k));
            return Rat(2 * static_cast<long>(n)) / (pow2(2 * n) * (Rat(1) - pow2(2 * n))) * acc;
        }
        case BVariant::thm1: {
            Rat acc(0);
            for (unsigned k = 0; k < n; ++k)
                acc += Rat(binomial(2 * n - 1, static_cast<long>(2 * k)) * euler_number(2 * k));
            return Rat(2 * static_cast<long>(n)) / (pow2(2 * n) * (pow2(2 * n) - Rat(1))) * acc;
        }
    }
    throw std::logic_error("bernoulli_via_moment: unreachable");
}

static Int require_integer(const Rat& v, const char* who) {
    if (denominator(v) != 1)
        throw std::runtime_error(std::string(who) + ": internal inconsistency, non-integer value");
    return numerator(v);
}

Int euler_via(unsigned n, EVariant variant) {
    switch (variant) {
        case EVariant::moment_2_20:
            return require_integer(exp_moment(gen_p(n), Rat(1)), "euler_via(moment_2_20)");
        case EVariant::q_at_0:
            return gen_q(n).coeff(0);
        case EVariant::explicit_sum: {
            if (n == 0) return Int(1);  // k = 0 extension of the sum (0^0 = 1)
            Rat acc(0);
            for (unsigned k = 1; k <= n; ++k) acc += explicit_inner_sum(n, k);
            return require_integer(acc, "euler_via(explicit_sum)");
        }
        case EVariant::thm2: {
            if (n < 1) throw std::invalid_argument("euler_via(thm2): requires n >= 1");
            Int acc(1);
            for (unsigned k = 0; k < n; ++k)
                acc -= pow_int(Int(2), 2 * (n - k) - 1) * binomial(2 * n, static_cast<long>(2 * k)) *
                       euler_number(2 * k);
            return acc;
        }
    }
    throw std::logic_error("euler_via: unreachable");
}

Rat zeta_even_ratio(unsigned n, ZVariant variant) {
    if (n < 1) throw std::invalid_argument("zeta_even_ratio: requires n >= 1");
    switch (variant) {
        case ZVariant::euler_2_10: {
            Rat v = pow2(2 * n - 1) * bernoulli_number(2 * n) / Rat(factorial(2 * n));
            return (n % 2 == 1) ? v : -v;
        }
        case ZVariant::moment_2_42: {
            Rat v = exp_moment_div_x(gen_p(n), Rat(1)) /
                    (Rat(2) * (pow2(2 * n) - Rat(1)) * Rat(factorial(2 * n - 1)));
            return (n % 2 == 0) ? v : -v;
        }
        case ZVariant::corollary1: {
            Rat acc(0);
            for (unsigned k = 0; k < n; ++k)
                acc += Rat(euler_number(2 * k)) /
                       Rat(factorial(2 * k) * factorial(2 * (n - k) - 1));
            Rat v = acc / (Rat(2) * (pow2(2 * n) - Rat(1)));
            return (n % 2 == 1) ? v : -v;
        }
    }
    throw std::logic_error("zeta_even_ratio: unreachable");
}

std::vector<unsigned> primes_up_to(unsigned m) {
    std::vector<unsigned> out;
    for (unsigned v = 2; v <= m; ++v) {
        bool prime = true;
        for (unsigned d = 2; d * d <= v; ++d)
            if (v % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(v);
    }
    return out;
}

StaudtClausenReport staudt_clausen_check(unsigned n) {
    if (n < 1) throw std::invalid_argument("staudt_clausen_check: requires n >= 1");
    StaudtClausenReport r;
    Rat b = bernoulli_number(2 * n);
    Rat scale = Rat(2) * (pow2(2 * n) - Rat(1));
    r.integrality_2_43 = denominator(scale * b) == 1;
    r.integrality_2_44 = denominator(scale * zeta_even_ratio(n) * Rat(factorial(2 * n - 1))) == 1;
    Rat vsc = b;
    for (unsigned p : primes_up_to(2 * n + 1))
        if ((2 * n) % (p - 1) == 0) vsc += Rat(1) / Rat(static_cast<long>(p));
    r.fractional_part_ok = denominator(vsc) == 1;
    return r;
}

ZetaComb ZetaComb::symbol(unsigned odd_arg, const Rat& coeff) {
    ZetaComb c;
    c.set(odd_arg, coeff);
    return c;
}

Rat ZetaComb::coeff(unsigned odd_arg) const {
    auto it = zeta_.find(odd_arg);
    return it == zeta_.end() ? Rat(0) : it->second;
}

void ZetaComb::set(unsigned odd_arg, const Rat& v) {
    if (odd_arg < 3 || odd_arg % 2 == 0)
        throw std::invalid_argument("ZetaComb: symbols are odd arguments >= 3");
    if (v == 0)
        zeta_.erase(odd_arg);
    else
        zeta_[odd_arg] = v;
}

ZetaComb ZetaComb::operator+(const ZetaComb& o) const {
    ZetaComb r = *this;
    r.const_ += o.const_;
    for (const auto& [s, v] : o.zeta_) r.set(s, r.coeff(s) + v);
    return r;
}

ZetaComb ZetaComb::operator-(const ZetaComb& o) const {
    ZetaComb r = *this;
    r.const_ -= o.const_;
    for (const auto& [s, v] : o.zeta_) r.set(s, r.coeff(s) - v);
    return r;
}

ZetaComb ZetaComb::operator*(const Rat& s) const {
    ZetaComb r;
    r.const_ = const_ * s;
    if (s != 0)
        for (const auto& [k, v] : zeta_) r.zeta_[k] = v * s;
    return r;
}

std::string ZetaComb::to_json() const {
    nlohmann::ordered_json j;
    j["const"] = rat_to_string(const_);
    j["zeta"] = nlohmann::ordered_json::object();
    for (const auto& [s, v] : zeta_) j["zeta"][std::to_string(s)] = rat_to_string(v);
    return j.dump();
}

std::variant<Rat, ZetaComb> sinh_moment(unsigned alpha) {
    if (alpha < 2) throw std::invalid_argument("sinh_moment: divergent for alpha < 2");
    Rat factor = (pow2(alpha) - Rat(1)) / pow2(alpha - 1) * Rat(factorial(alpha - 1));
    if (alpha % 2 == 0) return factor * zeta_even_ratio(alpha / 2);
    return ZetaComb::symbol(alpha, factor);
}

RatPoly odd_bernoulli_tau_poly(unsigned k) {
    RatPoly shifted = bernoulli_poly(2 * k + 1).shift(Rat(1) / Rat(2));
    for (int i = 0; i <= shifted.degree(); i += 2)
        if (shifted.coeff(static_cast<std::size_t>(i)) != 0)
            throw std::runtime_error(
                "odd_bernoulli_tau_poly: internal inconsistency, shifted polynomial not odd");
    // i*tau*B(1/2 - i*tau/2) = sum_j c_j (-1)^j tau^{2(j+1)} / 2^{2j+1},
    // with c_j the y^{2j+1} coefficient of B_{2k+1}(1/2 + y).
    std::vector<Rat> r(k + 2, Rat(0));
    for (unsigned j = 0; j <= k; ++j) {
        Rat cj = shifted.coeff(2 * j + 1);
        Rat term = cj / pow2(2 * static_cast<long>(j) + 1);
        r[j + 1] = (j % 2 == 0) ? term : -term;
    }
    return RatPoly(std::move(r));
}

OddZetaReport verify_odd_zeta_identity(unsigned n) {
    OddZetaReport rep;
    ZetaComb lhs;
    for (unsigned k = 0; k <= n; ++k) {
        Rat w = pow2(2 * k) / Rat(factorial(2 * k + 1) * factorial(2 * (n - k) + 1));
        RatPoly rk = odd_bernoulli_tau_poly(k);
        ZetaComb integral;
        for (int j = 1; j <= rk.degree(); ++j) {
            auto m = sinh_moment(2 * static_cast<unsigned>(j) + 1);
            integral = integral + std::get<ZetaComb>(m) * rk.coeff(static_cast<std::size_t>(j));
        }
        lhs = lhs + integral * w;
    }
    Rat rhs_coeff = Rat(static_cast<long>(n) + 1) * (Rat(2) - pow2(-2 * (static_cast<long>(n) + 1)));
    if (n % 2 == 1) rhs_coeff = -rhs_coeff;
    rep.lhs = lhs;
    rep.rhs = ZetaComb::symbol(2 * n + 3, rhs_coeff);
    rep.equal = (rep.lhs == rep.rhs);
    for (unsigned m = 0; m < n; ++m) {
        Rat acc(0);
        for (unsigned k = 0; k <= n - m; ++k)
            acc += (pow2(2 * k) - Rat(2)) * bernoulli_number(2 * k) /
                   Rat(factorial(2 * k) * factorial(2 * (n - m - k) + 1));
        rep.brackets_vanish.push_back(acc == 0);
    }
    return rep;
}

bool verify_theorem4(unsigned n) {
    if (n < 1) throw std::invalid_argument("verify_theorem4: requires n >= 1");
    Rat acc(0);
    for (unsigned k = 0; k <= n; ++k)
        acc += Rat(binomial(2 * n + 1, static_cast<long>(2 * k))) *
               (pow2(2 * static_cast<long>(k) - 1) - Rat(1)) * bernoulli_number(2 * k);
    return acc == 0;
}

}  // namespace bez
