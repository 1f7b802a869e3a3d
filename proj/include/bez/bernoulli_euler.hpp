#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bez/poly.hpp"

namespace bez {

// B_n by the classical recurrence sum_{k<n} C(n,k) B_k = 0; B_0 = 1.
Rat bernoulli_number(unsigned n);

// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
RatPoly bernoulli_poly(unsigned n);

// E_n by the recurrence sum_k C(2n,2k) E_{2k} = 0; E_0 = 1, odd indices 0.
Int euler_number(unsigned n);

// Alternative computations of B_{2n}, all of which must agree with
// bernoulli_number(2n): two exponential-moment routes (weights e^{-2x}, e^{-x})
// over p_n/x, two fully explicit triple sums, and an Euler-number connection
// formula.
enum class BVariant { eq2_13, eq2_37, explicit_2_39, explicit_2_40, thm1 };
Rat bernoulli_via_moment(unsigned n, BVariant variant);

// Alternative computations of E_{2n}: the exponential moment of p_n, the value
// q_n(0), an explicit triple sum, and a power-weighted recurrence.
enum class EVariant { moment_2_20, q_at_0, explicit_sum, thm2 };
Int euler_via(unsigned n, EVariant variant);

// The rational number zeta(2n)/pi^{2n}: classical Euler formula, the
// exponential-moment route, or the Euler-number sum.
enum class ZVariant { euler_2_10, moment_2_42, corollary1 };
Rat zeta_even_ratio(unsigned n, ZVariant variant = ZVariant::euler_2_10);

struct StaudtClausenReport {
    bool integrality_2_43 = false;  // 2(2^{2n}-1) B_{2n} is an integer
    bool integrality_2_44 = false;  // 2(2^{2n}-1) (2n-1)! zeta(2n)/pi^{2n} is an integer
    bool fractional_part_ok = false;  // B_{2n} + sum 1/p over primes with (p-1)|2n is an integer
    bool all_ok() const { return integrality_2_43 && integrality_2_44 && fractional_part_ok; }
};
StaudtClausenReport staudt_clausen_check(unsigned n);

// Primes <= m by trial division (m stays tiny here).
std::vector<unsigned> primes_up_to(unsigned m);

// Formal Q-linear combination  const + sum_s coeff[s] * zeta(s)/pi^s  over odd
// symbols s = 2m+3, treated as linearly independent; equality is symbol-wise.
class ZetaComb {
public:
    ZetaComb() = default;
    explicit ZetaComb(Rat constant) : const_(std::move(constant)) {}

    static ZetaComb symbol(unsigned odd_arg, const Rat& coeff);

    const Rat& constant() const { return const_; }
    const std::map<unsigned, Rat>& zeta_coeffs() const { return zeta_; }
    Rat coeff(unsigned odd_arg) const;

    bool is_zero() const { return const_ == 0 && zeta_.empty(); }
    bool operator==(const ZetaComb& o) const { return const_ == o.const_ && zeta_ == o.zeta_; }

    ZetaComb operator+(const ZetaComb& o) const;
    ZetaComb operator-(const ZetaComb& o) const;
    ZetaComb operator*(const Rat& s) const;

    // {"const": "a/b", "zeta": {"3": "c/d", ...}} keyed by the odd argument.
    std::string to_json() const;

private:
    void set(unsigned odd_arg, const Rat& v);

    Rat const_{0};
    std::map<unsigned, Rat> zeta_;
};

// Exact value of the integral over (0, inf) of tau^{alpha-1}/sinh(pi tau):
// ((2^a - 1)/2^{a-1}) (a-1)! * zeta(a)/pi^a. Even alpha folds the zeta-even
// ratio into a plain rational; odd alpha yields a one-symbol ZetaComb.
// Rejects alpha < 2 (divergent).
std::variant<Rat, ZetaComb> sinh_moment(unsigned alpha);

// The polynomial R_k(s), s = tau^2, with i*tau*B_{2k+1}((1-i*tau)/2) = R_k(tau^2).
// Exists because B_{2k+1}(1/2+y) is odd in y; R_k(0) = 0.
RatPoly odd_bernoulli_tau_poly(unsigned k);

struct OddZetaReport {
    ZetaComb lhs;
    ZetaComb rhs;
    bool equal = false;
    std::vector<bool> brackets_vanish;  // entry m (0 <= m < n)
    bool all_ok() const {
        if (!equal) return false;
        for (bool b : brackets_vanish)
            if (!b) return false;
        return true;
    }
};

// Builds both sides of the odd-zeta summation identity as ZetaCombs (left side
// by integrating R_k termwise with sinh_moment) and checks the vanishing of
// the Bernoulli bracket sums that make it reduce to a single symbol.
OddZetaReport verify_odd_zeta_identity(unsigned n);

// sum_{k=0}^{n} C(2n+1,2k) (2^{2k-1}-1) B_{2k} == 0.
bool verify_theorem4(unsigned n);

}  // namespace bez
