#pragma once

#include <vector>

#include "bez/biseries.hpp"
#include "bez/poly.hpp"

namespace bez {

// Independent construction routes for the polynomial sequence p_n.
enum class PRoute { diff_recurrence, sum_recurrence, explicit_coeffs };

// Independent construction routes for the companion sequence q_n.
enum class QRoute { derivative_sum, euler_convolution, inverse_recurrence };

// p_n: p_0 = 1; p_{n+1} = x^2 p_n'' + x(1-2x) p_n' - x p_n (reference route),
// or the pure summation recurrence p_{n+1} = -x sum_k C(2n+1,2k) p_k, or the
// explicit coefficient formula. All routes agree; for n >= 1 the constant term
// is 0, the x-coefficient is -1 and the leading coefficient is (-1)^n (2n-1)!!.
IntPoly gen_p(unsigned n, PRoute route = PRoute::diff_recurrence);

// p_0..p_n_max in one pass.
std::vector<IntPoly> p_table(unsigned n_max, PRoute route = PRoute::diff_recurrence);

// Explicit coefficient a_{n,k} of x^k in p_n (1 <= k <= n): a triple rational
// sum asserted to come out integral.
Int coeff_a(unsigned n, unsigned k);

// q_n: q_n = sum_k p_n^{(k)} (reference route), or the Euler-number
// convolution q_n = sum_k E_{2(n-k)} C(2n,2k) p_k, or the inverse recurrence
// q_n = p_n - sum_{k<n} C(2n,2k) q_k.
IntPoly gen_q(unsigned n, QRoute route = QRoute::derivative_sum);

std::vector<IntPoly> q_table(unsigned n_max, QRoute route = QRoute::derivative_sum);

// Same as q_table but built from a caller-supplied p-table (p_0..p_m). Lets the
// test suite propagate injected perturbations of p into q.
std::vector<IntPoly> q_table_from_p(const std::vector<IntPoly>& p);

// Truncated expansion of exp(-2x sinh^2(t/2)) in powers of t^2; term n equals
// p_n(x)/(2n)!.
Biseries gf_phi(unsigned N);

// gf_phi divided by the cosh t series; term n equals q_n(x)/(2n)!.
Biseries gf_f(unsigned N);

// Constant-coefficient even series used by the generating-function PDE checks,
// all in the variable s = t^2:
Biseries cosh_series(unsigned N);              // cosh t          = sum s^n/(2n)!
Biseries sinh_over_t_series(unsigned N);       // sinh(t)/t       = sum s^n/(2n+1)!
Biseries cosh_half_series(unsigned N);         // cosh(t/2)       = sum s^n/(4^n (2n)!)
Biseries sinh_half_over_t_series(unsigned N);  // sinh(t/2)/t     = sum s^n/(2*4^n (2n+1)!)
Biseries tanh_over_t_series(unsigned N);       // tanh(t)/t   as the series quotient
Biseries tanh_half_over_t_series(unsigned N);  // tanh(t/2)/t as the series quotient

}  // namespace bez
