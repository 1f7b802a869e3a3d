#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bez/rational.hpp"

namespace bez {

std::string coeff_to_string(const Int& v);
std::string coeff_to_string(const Rat& v);

// Dense univariate polynomial, index = power of x. Canonical form: no trailing
// zero coefficients; the zero polynomial stores an empty list (degree() == -1).
template <class C>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<C> coeffs) : c_(coeffs) { normalize(); }

    static Poly x() { return Poly({C(0), C(1)}); }
    static Poly constant(const C& v) { return Poly({v}); }

    const std::vector<C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly operator+(const Poly& o) const {
        std::vector<C> r(std::max(c_.size(), o.c_.size()), C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<C> r(std::max(c_.size(), o.c_.size()), C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<C> r = c_;
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<C> r(c_.size() + o.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const C& s) const {
        std::vector<C> r = c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<C> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * C(static_cast<long>(k));
        return Poly(std::move(r));
    }

    Poly nth_derivative(unsigned k) const {
        Poly r = *this;
        for (unsigned i = 0; i < k; ++i) r = r.derivative();
        return r;
    }

    // Horner evaluation in any ring X the coefficients convert into
    // (Rat, or a floating type).
    template <class X>
    X eval_as(const X& x) const {
        X acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + static_cast<X>(c_[i]);
        return acc;
    }

    C eval(const C& x) const { return eval_as<C>(x); }

    // p(x + a), exact Taylor shift by Horner.
    Poly shift(const C& a) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            // acc <- acc*(x+a) + c_[i]
            std::vector<C> r(acc.c_.size() + 1, C(0));
            for (std::size_t j = 0; j < acc.c_.size(); ++j) {
                r[j + 1] += acc.c_[j];
                r[j] += acc.c_[j] * a;
            }
            if (r.empty()) r.push_back(C(0));
            r[0] += c_[i];
            acc = Poly(std::move(r));
        }
        return acc;
    }

    Poly mul_x() const {
        if (is_zero()) return Poly();
        std::vector<C> r(c_.size() + 1, C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i];
        return Poly(std::move(r));
    }

    // p / x; requires a zero constant term.
    Poly div_x() const {
        if (is_zero()) return Poly();
        if (c_[0] != C(0)) throw std::invalid_argument("div_x: nonzero constant term");
        return Poly(std::vector<C>(c_.begin() + 1, c_.end()));
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
    }

    std::vector<C> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat_poly(const IntPoly& p) {
    std::vector<Rat> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return RatPoly(std::move(r));
}

inline std::optional<IntPoly> try_to_int_poly(const RatPoly& p) {
    std::vector<Int> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (denominator(c) != 1) return std::nullopt;
        r.push_back(numerator(c));
    }
    return IntPoly(std::move(r));
}

// Coefficient strings, low-to-high (the JSON wire form); zero poly -> [].
template <class C>
std::vector<std::string> poly_coeff_strings(const Poly<C>& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(coeff_to_string(c));
    return out;
}

// Human form, highest power first: "3x^2 - x", "x^2 - x + 1/6", "1", "0".
template <class C>
std::string poly_to_pretty(const Poly<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        C c = p.coeff(static_cast<std::size_t>(k));
        if (c == C(0)) continue;
        bool neg = c < C(0);
        std::string mag = coeff_to_string(neg ? C(-c) : c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag;
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace bez
