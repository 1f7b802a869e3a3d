#include "bez/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace bez {

Int pow_int(const Int& base, unsigned long e) {
    Int acc(1);
    Int b = base;
    while (e > 0) {
        if (e & 1UL) acc *= b;
        b *= b;
        e >>= 1UL;
    }
    return acc;
}

Rat pow_rat(const Rat& base, long e) {
    if (e >= 0) {
        Rat acc(1);
        Rat b = base;
        unsigned long k = static_cast<unsigned long>(e);
        while (k > 0) {
            if (k & 1UL) acc *= b;
            b *= b;
            k >>= 1UL;
        }
        return acc;
    }
    if (base == 0) throw std::domain_error("pow_rat: zero base with negative exponent");
    return Rat(1) / pow_rat(base, -e);
}

Rat pow2(long e) { return pow_rat(Rat(2), e); }

Int factorial(unsigned long n) {
    static std::vector<Int> cache{Int(1)};
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    while (cache.size() <= n) {
        cache.push_back(cache.back() * Int(cache.size()));
    }
    return cache[n];
}

Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
    unsigned long uk = static_cast<unsigned long>(k);
    return factorial(n) / (factorial(uk) * factorial(n - uk));
}

Int double_factorial_odd(unsigned long n) {
    if (n < 1) throw std::invalid_argument("double_factorial_odd: requires n >= 1");
    Int acc(1);
    for (unsigned long j = 1; j <= n; ++j) acc *= Int(2 * j - 1);
    return acc;
}

std::string rat_to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    return Rat(s);  // mpq canonicalizes, so "3/6" becomes 1/2
}

}  // namespace bez
