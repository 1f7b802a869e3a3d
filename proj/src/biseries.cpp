#include "bez/biseries.hpp"

#include <stdexcept>

namespace bez {

Biseries::Biseries(std::vector<RatPoly> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("Biseries: needs at least the t^0 term");
}

Biseries Biseries::zero(unsigned order) {
    return Biseries(std::vector<RatPoly>(order + 1, RatPoly()));
}

Biseries Biseries::one(unsigned order) {
    std::vector<RatPoly> t(order + 1, RatPoly());
    t[0] = RatPoly::constant(Rat(1));
    return Biseries(std::move(t));
}

const RatPoly& Biseries::term(unsigned n) const {
    if (n >= terms_.size()) throw std::out_of_range("Biseries::term: index beyond order");
    return terms_[n];
}

static void require_same_order(const Biseries& a, const Biseries& b, const char* who) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(who) + ": operands have different orders");
}

Biseries Biseries::operator+(const Biseries& o) const {
    require_same_order(*this, o, "Biseries::operator+");
    std::vector<RatPoly> r(terms_.size());
    for (std::size_t n = 0; n < terms_.size(); ++n) r[n] = terms_[n] + o.terms_[n];
    return Biseries(std::move(r));
}

Biseries Biseries::operator-(const Biseries& o) const {
    require_same_order(*this, o, "Biseries::operator-");
    std::vector<RatPoly> r(terms_.size());
    for (std::size_t n = 0; n < terms_.size(); ++n) r[n] = terms_[n] - o.terms_[n];
    return Biseries(std::move(r));
}

Biseries Biseries::derivative_x() const {
    std::vector<RatPoly> r(terms_.size());
    for (std::size_t n = 0; n < terms_.size(); ++n) r[n] = terms_[n].derivative();
    return Biseries(std::move(r));
}

Biseries biseries_mul(const Biseries& a, const Biseries& b) {
    require_same_order(a, b, "biseries_mul");
    unsigned N = a.order();
    std::vector<RatPoly> r(N + 1, RatPoly());
    for (unsigned i = 0; i <= N; ++i)
        for (unsigned j = 0; i + j <= N; ++j) r[i + j] = r[i + j] + a.term(i) * b.term(j);
    return Biseries(std::move(r));
}

Biseries biseries_exp(const Biseries& u) {
    if (!u.term(0).is_zero())
        throw std::invalid_argument("biseries_exp: series must have zero constant term");
    unsigned N = u.order();
    std::vector<RatPoly> e(N + 1, RatPoly());
    e[0] = RatPoly::constant(Rat(1));
    for (unsigned n = 1; n <= N; ++n) {
        RatPoly acc;
        for (unsigned k = 1; k <= n; ++k)
            acc = acc + u.term(k) * e[n - k] * Rat(static_cast<long>(k));
        e[n] = acc * (Rat(1) / Rat(static_cast<long>(n)));
    }
    return Biseries(std::move(e));
}

Biseries biseries_div(const Biseries& a, const Biseries& b) {
    require_same_order(a, b, "biseries_div");
    const RatPoly& b0 = b.term(0);
    if (b0.is_zero() || b0.degree() != 0)
        throw std::invalid_argument("biseries_div: divisor's t^0 term must be a nonzero constant");
    Rat inv = Rat(1) / b0.coeff(0);
    unsigned N = a.order();
    std::vector<RatPoly> q(N + 1, RatPoly());
    for (unsigned n = 0; n <= N; ++n) {
        RatPoly acc = a.term(n);
        for (unsigned k = 1; k <= n; ++k) acc = acc - b.term(k) * q[n - k];
        q[n] = acc * inv;
    }
    return Biseries(std::move(q));
}

}  // namespace bez
