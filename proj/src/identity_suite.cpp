#include "bez/identity_suite.hpp"

#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "bez/bernoulli_euler.hpp"
#include "bez/moment.hpp"
#include "bez/sheffer.hpp"

namespace bez {

namespace {

using nlohmann::ordered_json;

struct Outcome {
    Verdict v = Verdict::pass;
    std::string lhs;  // populated on failure
    std::string rhs;
};

Outcome ok() { return {Verdict::pass, "", ""}; }
Outcome vac() { return {Verdict::vacuous, "", ""}; }
Outcome bad(std::string lhs, std::string rhs) {
    return {Verdict::fail, std::move(lhs), std::move(rhs)};
}

Outcome cmp_rat(const Rat& lhs, const Rat& rhs) {
    if (lhs == rhs) return ok();
    return bad(rat_to_string(lhs), rat_to_string(rhs));
}

Outcome cmp_poly(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs == rhs) return ok();
    return bad(poly_to_pretty(lhs), poly_to_pretty(rhs));
}

Outcome cmp_poly(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs == rhs) return ok();
    return bad(poly_to_pretty(lhs), poly_to_pretty(rhs));
}

// Second derivative at 0 read off the coefficient table.
Int ppp0(const IntPoly& p) { return Int(2) * p.coeff(2); }

// sum_{k=0}^{n} C(2n,2k)
Int even_binomial_sum(unsigned n) {
    Int s = 0;
    for (unsigned k = 0; k <= n; ++k) s += binomial(2 * n, 2 * k);
    return s;
}

// sum_{k=1}^{n} C(2n,2k-1) ((2^{2k}-1)/k) B_{2k} (appears in several checks)
Rat tanh_weight_sum(unsigned n) {
    Rat s = 0;
    for (unsigned k = 1; k <= n; ++k) {
        Rat w = Rat(binomial(2 * n, 2 * k - 1)) * Rat(pow_int(2, 2 * k) - 1) / Rat(k);
        s += w * bernoulli_number(2 * k);
    }
    return s;
}

// ---- per-n check bodies ------------------------------------------------

Outcome chk_p_values(const SuiteContext& ctx, unsigned n) {
    const IntPoly& p = ctx.p[n];
    Int want_pp = Int(2) * (pow_int(2, 2 * (n - 1)) - 1);
    bool good = p.coeff(0) == 0 && p.coeff(1) == -1 && ppp0(p) == want_pp;
    if (good) return ok();
    std::ostringstream l, r;
    l << "[" << p.coeff(0) << ", " << p.coeff(1) << ", " << ppp0(p) << "]";
    r << "[0, -1, " << want_pp << "]";
    return bad(l.str(), r.str());
}

Outcome chk_eq1_18(const SuiteContext& ctx, unsigned n) {
    IntPoly rhs;
    for (unsigned k = 0; k < n; ++k) rhs = rhs + ctx.p[k] * binomial(2 * n, 2 * k);
    return cmp_poly(ctx.p[n].derivative(), -rhs);
}

Outcome chk_eq1_20(const SuiteContext& ctx, unsigned n) {
    IntPoly sum;
    for (unsigned k = 0; k < n; ++k) sum = sum + ctx.p[k] * binomial(2 * n - 1, 2 * k);
    return cmp_poly(ctx.p[n], -sum.mul_x());
}

Outcome chk_eq1_21(const SuiteContext& ctx, unsigned n) {
    IntPoly lhs;
    for (unsigned k = 0; k <= n; ++k)
        lhs = lhs + ctx.p[k].derivative() * binomial(2 * n + 1, 2 * k);
    IntPoly rhs;
    for (unsigned k = 1; k <= n; ++k) rhs = rhs + ctx.p[k] * binomial(2 * n + 1, 2 * k - 1);
    return cmp_poly(lhs.mul_x(), rhs);
}

Outcome chk_eq2_14(const SuiteContext& ctx, unsigned n) {
    Rat rhs = Rat(2 * n) / Rat(1 - pow_int(2, 4 * n)) *
              exp_moment_div_x(ctx.p[n] * ctx.p[n], Rat(2));
    return cmp_rat(bernoulli_number(4 * n), rhs);
}

// The equal-split case of the product rule: the weight-2 moment of p_{2m}
// equals that of p_m^2. Levels with no equal split (odd n) are vacuous.
Outcome chk_eq2_15(const SuiteContext& ctx, unsigned n) {
    if (n % 2 != 0) return vac();
    const IntPoly& h = ctx.p[n / 2];
    return cmp_rat(exp_moment_div_x(ctx.p[n], Rat(2)), exp_moment_div_x(h * h, Rat(2)));
}

Outcome chk_eq2_16(const SuiteContext& ctx, unsigned n) {
    if (n < 2) return vac();  // no split with both factors of positive index
    Rat whole = exp_moment_div_x(ctx.p[n], Rat(2));
    for (unsigned a = 1; a < n; ++a) {
        Rat split = exp_moment_div_x(ctx.p[a] * ctx.p[n - a], Rat(2));
        if (split != whole) {
            std::ostringstream l;
            l << "split (" << a << "," << (n - a) << "): " << rat_to_string(split);
            return bad(l.str(), rat_to_string(whole));
        }
    }
    return ok();
}

Outcome chk_eq2_17(const SuiteContext& ctx, unsigned n) {
    Rat scale = Rat(n) / Rat(1 - pow_int(2, 2 * n));
    Rat b = bernoulli_number(2 * n);
    for (unsigned a = 0; a <= n; ++a) {
        Rat rhs = scale * exp_moment_div_x(ctx.p[a] * ctx.p[n - a], Rat(2));
        if (rhs != b) {
            std::ostringstream r;
            r << "split (" << a << "," << (n - a) << "): " << rat_to_string(rhs);
            return bad(rat_to_string(b), r.str());
        }
    }
    return ok();
}

Outcome chk_eq2_22_vs_2_28(const SuiteContext& ctx, unsigned n) {
    // Reference route (derivative sum) against the Euler-number convolution
    // and against the inverse of the cosh convolution.
    IntPoly conv;
    for (unsigned k = 0; k <= n; ++k)
        conv = conv + ctx.p[k] * (binomial(2 * n, 2 * k) * euler_number(2 * (n - k)));
    if (conv != ctx.q[n]) return bad(poly_to_pretty(ctx.q[n]), poly_to_pretty(conv));
    IntPoly inv = ctx.p[n];
    for (unsigned k = 0; k < n; ++k) inv = inv - ctx.q[k] * binomial(2 * n, 2 * k);
    if (inv != ctx.q[n]) return bad(poly_to_pretty(ctx.q[n]), poly_to_pretty(inv));
    return ok();
}

Outcome chk_eq2_29(const SuiteContext& ctx, unsigned n) {
    IntPoly rhs;
    for (unsigned k = 0; k < n; ++k) rhs = rhs + ctx.q[k] * binomial(2 * n, 2 * k);
    return cmp_poly(ctx.q[n].derivative(), -rhs);
}

Outcome chk_eq2_30(const SuiteContext& ctx, unsigned n) {
    RatPoly lhs = to_rat_poly(ctx.p[n].derivative().mul_x());
    RatPoly rhs;
    for (unsigned k = 1; k <= n; ++k) {
        Rat w = Rat(binomial(2 * n, 2 * k - 1)) * Rat(pow_int(2, 2 * k) - 1) / Rat(k) *
                bernoulli_number(2 * k);
        rhs = rhs + to_rat_poly(ctx.p[n + 1 - k]) * w;
    }
    return cmp_poly(lhs, rhs);
}

Outcome chk_eq2_31(const SuiteContext&, unsigned n) {
    return cmp_rat(tanh_weight_sum(n), Rat(1));
}

Outcome chk_eq2_32(const SuiteContext&, unsigned n) {
    Rat lhs = 0;
    for (unsigned r = 1; r <= n; ++r)
        lhs += Rat(euler_number(2 * r)) /
               Rat(factorial(2 * r - 1) * factorial(2 * (n - r + 1)));
    Rat rhs = 0;
    for (unsigned r = 1; r <= n; ++r)
        for (unsigned k = 1; k <= r; ++k)
            rhs += Rat(pow_int(2, 2 * k) - 1) * bernoulli_number(2 * k) *
                   Rat(euler_number(2 * (r - k + 1))) /
                   Rat(factorial(2 * k) * factorial(2 * (n - r) + 1) *
                       factorial(2 * (r - k) + 1));
    return cmp_rat(lhs, Rat(2) * rhs);
}

Outcome chk_eq2_33(const SuiteContext& ctx, unsigned n) {
    Rat lhs = bernoulli_number(2 * n) * Rat(even_binomial_sum(n));
    Rat rhs = Rat(n) / Rat(1 - pow_int(2, 2 * n)) * exp_moment_div_x(ctx.p[n], Rat(1));
    return cmp_rat(lhs, rhs);
}

Outcome chk_eq2_34(const SuiteContext& ctx, unsigned n) {
    Int lhs = even_binomial_sum(n);
    Int rhs = ppp0(ctx.p[n]) + 2;
    if (lhs == rhs) return ok();
    return bad(lhs.str(), rhs.str());
}

Outcome chk_eq2_35(const SuiteContext& ctx, unsigned n) {
    Rat sum = 0;
    for (unsigned k = 2; k < n; ++k) {
        Rat w = Rat(binomial(2 * n, 2 * k - 1)) *
                Rat(pow_int(2, 2 * (n - k + 1)) - 1) / Rat(n - k + 1) *
                bernoulli_number(2 * (n - k + 1));
        sum += w * Rat(ppp0(ctx.p[k]));
    }
    Rat rhs = sum / Rat(2 - static_cast<long>(n));
    Rat lhs = Rat(ppp0(ctx.p[n]));
    if (lhs == rhs) return ok();
    return bad(rat_to_string(lhs),
               rat_to_string(rhs) + " [recurrence disagrees with tabulated value]");
}

Outcome chk_eq2_36(const SuiteContext& ctx, unsigned n) {
    Int lhs = even_binomial_sum(n);
    Int closed = pow_int(2, 2 * n - 1);
    if (lhs != closed) return bad(lhs.str(), closed.str());
    Rat combined = Rat(2 * n) / Rat(pow_int(2, 2 * n) - pow_int(2, 4 * n)) *
                   exp_moment_div_x(ctx.p[n], Rat(1));
    return cmp_rat(bernoulli_number(2 * n), combined);
}

Outcome chk_eq2_38(const SuiteContext&, unsigned n) {
    Rat lhs = 0;
    for (unsigned k = 2; k < n; ++k)
        lhs += Rat(binomial(2 * n, 2 * k - 1)) *
               Rat((pow_int(2, 2 * (n - k + 1)) - 1) * (pow_int(2, 2 * (k - 1)) - 1)) /
               Rat(n - k + 1) * bernoulli_number(2 * (n - k + 1));
    Rat rhs = Rat(pow_int(2, 2 * (n - 1)) - 1) * Rat(2 - static_cast<long>(n));
    return cmp_rat(lhs, rhs);
}

Outcome chk_eq2_41(const SuiteContext& ctx, unsigned n) {
    return cmp_rat(exp_moment_div_x(ctx.p[n], Rat(1)),
                   Rat(pow_int(2, 2 * n - 1)) * exp_moment_div_x(ctx.p[n], Rat(2)));
}

Outcome chk_thm1(const SuiteContext&, unsigned n) {
    return cmp_rat(bernoulli_via_moment(n, BVariant::thm1), bernoulli_number(2 * n));
}

Outcome chk_thm2(const SuiteContext&, unsigned n) {
    Int lhs = euler_via(n, EVariant::thm2);
    Int rhs = euler_number(2 * n);
    if (lhs == rhs) return ok();
    return bad(lhs.str(), rhs.str());
}

Outcome chk_thm3(const SuiteContext&, unsigned n) {
    StaudtClausenReport rep = staudt_clausen_check(n);
    if (rep.all_ok()) return ok();
    std::ostringstream l;
    l << "[doubled-difference integral: " << rep.integrality_2_43
      << ", zeta-ratio integral: " << rep.integrality_2_44
      << ", fractional part: " << rep.fractional_part_ok << "]";
    return bad(l.str(), "[1, 1, 1]");
}

Outcome chk_thm4(const SuiteContext&, unsigned n) {
    Rat s = 0;
    for (unsigned k = 0; k <= n; ++k)
        s += Rat(binomial(2 * n + 1, 2 * k)) * (pow2(2 * static_cast<long>(k) - 1) - 1) *
             bernoulli_number(2 * k);
    return cmp_rat(s, Rat(0));
}

Outcome chk_corollary2(const SuiteContext& ctx, unsigned n) {
    Rat v = Rat(2 * n) * exp_moment_div_x(ctx.p[n], Rat(2));
    if (denominator(v) == 1) return ok();
    return bad(rat_to_string(v), "an integer");
}

Outcome chk_eq3_11_3_13(const SuiteContext&, unsigned n) {
    OddZetaReport rep = verify_odd_zeta_identity(n);
    if (rep.all_ok()) return ok();
    std::string l = rep.lhs.to_json();
    if (!rep.equal) return bad(l, rep.rhs.to_json());
    for (std::size_t m = 0; m < rep.brackets_vanish.size(); ++m)
        if (!rep.brackets_vanish[m])
            return bad("bracket m=" + std::to_string(m) + " nonzero", "0");
    return bad(l, rep.rhs.to_json());
}

// ---- generating-function differential checks ----------------------------
//
// With phi_n = term n of gf_phi(N) and f_n = term n of gf_f(N), the six
// first-order relations of the generating functions become, per power t^{2n}
// (n = 1..N-1):
//   dphi_dt:   2n phi_n + x sum_{k<n} phi_k / (2(n-k)-1)!            == 0
//   dphi_dx:   phi_n' + sum_{m=1..n} phi_{n-m} / (2m)!               == 0
//   x_dphi_dx: x phi_n' - sum_{k=1..n} TH_{n-k} 2k phi_k             == 0
//   df_dt:     2n f_n + x sum_{k<n} f_k/(2(n-k)-1)! + sum T_{n-1-k} f_k == 0
//   df_dx:     f_n' + sum_{m=1..n} f_{n-m} / (2m)!                   == 0
//   x_df_dx:   x f_n' - sum_{m<n} TH_{n-1-m} b_m                     == 0,
//              b_m = 2(m+1) f_{m+1} + sum_{k<=m} f_k T_{m-k}
// where T, TH are the even-series coefficients of tanh(t)/t and tanh(t/2)/t.
struct GfData {
    std::vector<RatPoly> phi, f;
    std::vector<Rat> T, TH;
};

GfData build_gf_data(unsigned N) {
    GfData d;
    Biseries phi = gf_phi(N), f = gf_f(N);
    Biseries t = tanh_over_t_series(N), th = tanh_half_over_t_series(N);
    for (unsigned k = 0; k <= N; ++k) {
        d.phi.push_back(phi.term(k));
        d.f.push_back(f.term(k));
        d.T.push_back(t.term(k).coeff(0));
        d.TH.push_back(th.term(k).coeff(0));
    }
    return d;
}

Outcome chk_gf_at(const GfData& d, unsigned n) {
    auto fail = [&](const char* which, const RatPoly& lhs, const RatPoly& rhs) {
        return bad(std::string(which) + ": " + poly_to_pretty(lhs), poly_to_pretty(rhs));
    };

    RatPoly zero;

    RatPoly s1;
    for (unsigned k = 0; k < n; ++k)
        s1 = s1 + d.phi[k] * (Rat(1) / Rat(factorial(2 * (n - k) - 1)));
    RatPoly lhs1 = d.phi[n] * Rat(2 * n) + s1.mul_x();
    if (!lhs1.is_zero()) return fail("dphi_dt", lhs1, zero);

    RatPoly s2 = d.phi[n].derivative();
    for (unsigned m = 1; m <= n; ++m)
        s2 = s2 + d.phi[n - m] * (Rat(1) / Rat(factorial(2 * m)));
    if (!s2.is_zero()) return fail("dphi_dx", s2, zero);

    RatPoly rhs3;
    for (unsigned k = 1; k <= n; ++k) rhs3 = rhs3 + d.phi[k] * (d.TH[n - k] * Rat(2 * k));
    RatPoly lhs3 = d.phi[n].derivative().mul_x();
    if (lhs3 != rhs3) return fail("x_dphi_dx", lhs3, rhs3);

    RatPoly s4a;
    for (unsigned k = 0; k < n; ++k)
        s4a = s4a + d.f[k] * (Rat(1) / Rat(factorial(2 * (n - k) - 1)));
    RatPoly s4b;
    for (unsigned k = 0; k < n; ++k) s4b = s4b + d.f[k] * d.T[n - 1 - k];
    RatPoly lhs4 = d.f[n] * Rat(2 * n) + s4a.mul_x() + s4b;
    if (!lhs4.is_zero()) return fail("df_dt", lhs4, zero);

    RatPoly s5 = d.f[n].derivative();
    for (unsigned m = 1; m <= n; ++m)
        s5 = s5 + d.f[n - m] * (Rat(1) / Rat(factorial(2 * m)));
    if (!s5.is_zero()) return fail("df_dx", s5, zero);

    RatPoly rhs6;
    for (unsigned m = 0; m < n; ++m) {
        RatPoly b = d.f[m + 1] * Rat(2 * (m + 1));
        for (unsigned k = 0; k <= m; ++k) b = b + d.f[k] * d.T[m - k];
        rhs6 = rhs6 + b * d.TH[n - 1 - m];
    }
    RatPoly lhs6 = d.f[n].derivative().mul_x();
    if (lhs6 != rhs6) return fail("x_df_dx", lhs6, rhs6);

    return ok();
}

// ---- registry ------------------------------------------------------------

using PerN = std::function<Outcome(const SuiteContext&, unsigned)>;

struct CheckDef {
    unsigned min_n = 1;
    PerN per_n;
    // When set, produces the whole report (used by the series checks, whose
    // valid range depends on the truncation order).
    std::function<IdentityReport(const SuiteContext&, unsigned)> custom;
};

IdentityReport run_per_n(const std::string& id, const CheckDef& def, const SuiteContext& ctx,
                         unsigned n_max) {
    IdentityReport rep;
    rep.id = id;
    if (n_max < def.min_n) {
        rep.n_min = def.min_n;
        rep.n_max = n_max;
        rep.skipped = true;
        return rep;
    }
    rep.n_min = def.min_n;
    rep.n_max = n_max;
    for (unsigned n = def.min_n; n <= n_max; ++n) {
        Outcome out;
        try {
            out = def.per_n(ctx, n);
        } catch (const std::exception& e) {
            out = bad(std::string("error: ") + e.what(), "");
        }
        rep.verdicts.push_back(out.v);
        if (out.v == Verdict::fail && !rep.counterexample)
            rep.counterexample = Counterexample{n, out.lhs, out.rhs};
    }
    return rep;
}

IdentityReport run_gf_pdes(const SuiteContext&, unsigned n_max) {
    IdentityReport rep;
    rep.id = "gf_pdes";
    if (n_max < 2) {  // needs at least order 2 to compare anything below it
        rep.n_min = 2;
        rep.n_max = n_max;
        rep.skipped = true;
        return rep;
    }
    GfData d = build_gf_data(n_max);
    rep.n_min = 1;
    rep.n_max = n_max - 1;
    for (unsigned n = 1; n <= n_max - 1; ++n) {
        Outcome out;
        try {
            out = chk_gf_at(d, n);
        } catch (const std::exception& e) {
            out = bad(std::string("error: ") + e.what(), "");
        }
        rep.verdicts.push_back(out.v);
        if (out.v == Verdict::fail && !rep.counterexample)
            rep.counterexample = Counterexample{n, out.lhs, out.rhs};
    }
    return rep;
}

const std::vector<std::pair<std::string, CheckDef>>& registry() {
    static const std::vector<std::pair<std::string, CheckDef>> defs = [] {
        std::vector<std::pair<std::string, CheckDef>> v;
        auto add = [&v](const char* id, unsigned min_n, PerN fn) {
            v.push_back({id, CheckDef{min_n, std::move(fn), nullptr}});
        };
        add("p_values", 1, chk_p_values);
        add("eq1_18", 1, chk_eq1_18);
        add("eq1_20", 1, chk_eq1_20);
        add("eq1_21", 1, chk_eq1_21);
        add("eq2_14", 1, chk_eq2_14);
        add("eq2_15", 2, chk_eq2_15);
        add("eq2_16", 1, chk_eq2_16);
        add("eq2_17", 1, chk_eq2_17);
        add("eq2_22_vs_2_28", 0, chk_eq2_22_vs_2_28);
        add("eq2_29", 1, chk_eq2_29);
        add("eq2_30", 1, chk_eq2_30);
        add("eq2_31", 1, chk_eq2_31);
        add("eq2_32", 1, chk_eq2_32);
        add("eq2_33", 1, chk_eq2_33);
        add("eq2_34", 1, chk_eq2_34);
        add("eq2_35", 4, chk_eq2_35);
        add("eq2_36", 1, chk_eq2_36);
        add("eq2_38", 4, chk_eq2_38);
        add("eq2_41", 1, chk_eq2_41);
        add("thm1", 1, chk_thm1);
        add("thm2", 1, chk_thm2);
        add("thm3", 1, chk_thm3);
        add("thm4", 1, chk_thm4);
        add("corollary2", 1, chk_corollary2);
        add("eq3_11_3_13", 0, chk_eq3_11_3_13);
        v.push_back({"gf_pdes", CheckDef{2, nullptr, run_gf_pdes}});
        return v;
    }();
    return defs;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& [name, def] : registry())
        if (name == id) return def;
    throw std::invalid_argument("unknown check: " + id);
}

}  // namespace

std::string verdict_to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::vacuous: return "vacuous";
        case Verdict::fail: return "fail";
    }
    return "fail";
}

bool IdentityReport::all_ok() const {
    for (Verdict v : verdicts)
        if (v == Verdict::fail) return false;
    return true;
}

std::string IdentityReport::to_json() const {
    ordered_json j;
    j["id"] = id;
    j["n_range"] = {n_min, n_max};
    ordered_json vs = ordered_json::array();
    for (Verdict v : verdicts) vs.push_back(verdict_to_string(v));
    j["verdicts"] = vs;
    if (counterexample) {
        j["counterexample"] = {{"n", counterexample->n},
                               {"lhs", counterexample->lhs},
                               {"rhs", counterexample->rhs}};
    } else {
        j["counterexample"] = nullptr;
    }
    if (skipped) j["skipped"] = true;
    return j.dump();
}

SuiteContext make_context(unsigned n_max) { return make_context(p_table(n_max)); }

SuiteContext make_context(std::vector<IntPoly> p) {
    SuiteContext ctx;
    ctx.q = q_table_from_p(p);
    ctx.p = std::move(p);
    return ctx;
}

const std::vector<std::string>& registered_check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [name, def] : registry()) v.push_back(name);
        return v;
    }();
    return ids;
}

bool is_registered_check(const std::string& id) {
    for (const auto& name : registered_check_ids())
        if (name == id) return true;
    return false;
}

IdentityReport run_check(const SuiteContext& ctx, const std::string& id, unsigned n_max) {
    if (ctx.p.size() <= n_max || ctx.q.size() <= n_max)
        throw std::invalid_argument("context tables shorter than requested range");
    const CheckDef& def = find_check(id);
    if (def.custom) return def.custom(ctx, n_max);
    return run_per_n(id, def, ctx, n_max);
}

IdentityReport run_check(const std::string& id, unsigned n_max) {
    find_check(id);  // reject unknown ids before paying for the tables
    SuiteContext ctx = make_context(n_max);
    return run_check(ctx, id, n_max);
}

std::vector<IdentityReport> run_all(const SuiteContext& ctx, unsigned n_max) {
    std::vector<IdentityReport> out;
    for (const auto& id : registered_check_ids()) out.push_back(run_check(ctx, id, n_max));
    return out;
}

std::vector<IdentityReport> run_all(unsigned n_max) {
    SuiteContext ctx = make_context(n_max);
    return run_all(ctx, n_max);
}

}  // namespace bez
