#include <doctest.h>

#include <bez/biseries.hpp>
#include <bez/moment.hpp>
#include <bez/poly.hpp>
#include <bez/rational.hpp>

#include <stdexcept>
#include <vector>

using namespace bez;

TEST_CASE("binomial coefficients: table values and edge cases") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 4) == 35);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(9, 0) == 1);
    CHECK(binomial(9, 9) == 1);
    CHECK(binomial(5, 9) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(52, 26) == Int("495918532948104"));
}

TEST_CASE("binomial coefficients satisfy the Pascal recurrence") {
    for (unsigned long n = 1; n <= 25; ++n)
        for (long k = 0; k <= static_cast<long>(n); ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial and double factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(20) == Int("2432902008176640000"));

    CHECK(double_factorial_odd(1) == 1);
    CHECK(double_factorial_odd(2) == 3);
    CHECK(double_factorial_odd(3) == 15);
    CHECK(double_factorial_odd(5) == 945);
    CHECK_THROWS_AS(double_factorial_odd(0), std::invalid_argument);

    // (2n-1)!! = (2n)! / (2^n n!)
    for (unsigned long n = 1; n <= 15; ++n)
        CHECK(double_factorial_odd(n) * pow_int(2, n) * factorial(n) == factorial(2 * n));
}

TEST_CASE("integer and rational powers") {
    CHECK(pow_int(3, 0) == 1);
    CHECK(pow_int(2, 10) == 1024);
    CHECK(pow_int(-2, 3) == -8);

    CHECK(pow2(0) == 1);
    CHECK(pow2(6) == 64);
    CHECK(pow2(-3) == Rat(1, 8));

    CHECK(pow_rat(Rat(2, 3), 2) == Rat(4, 9));
    CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(pow_rat(Rat(-1, 2), 3) == Rat(-1, 8));
    CHECK(pow_rat(Rat(0), 4) == 0);
    CHECK_THROWS_AS(pow_rat(Rat(0), -1), std::domain_error);
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_to_string(Rat(-7, 3)) == "-7/3");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_from_string("3/6") == Rat(1, 2));
    CHECK(rat_from_string("-10/4") == Rat(-5, 2));
    CHECK(rat_from_string("42") == 42);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);

    const Rat samples[] = {Rat(0), Rat(1), Rat(-1), Rat(22, 7), Rat(-691, 2730)};
    for (const Rat& v : samples) CHECK(rat_from_string(rat_to_string(v)) == v);
}

TEST_CASE("polynomials keep a canonical coefficient list") {
    IntPoly trimmed({1, 2, 0, 0});
    CHECK(trimmed.degree() == 1);
    CHECK(trimmed.coeffs().size() == 2);

    IntPoly zero({0, 0, 0});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero == IntPoly());
    CHECK(zero.coeff(3) == 0);
}

TEST_CASE("polynomial arithmetic") {
    IntPoly x = IntPoly::x();
    IntPoly one = IntPoly::constant(1);
    CHECK((x + one) * (x - one) == IntPoly({-1, 0, 1}));
    CHECK(-(x - one) == one - x);
    CHECK((x * Int(3)).coeff(1) == 3);
    CHECK((x - x).is_zero());

    IntPoly p({0, -1, 3});  // 3x^2 - x
    CHECK(p.derivative() == IntPoly({-1, 6}));
    CHECK(p.nth_derivative(2) == IntPoly::constant(6));
    CHECK(p.nth_derivative(3).is_zero());
    CHECK(p.eval(Int(2)) == 10);
    CHECK(p.eval_as<Rat>(Rat(1, 2)) == Rat(1, 4));
}

TEST_CASE("polynomial shift is an exact Taylor shift") {
    IntPoly sq({0, 0, 1});
    CHECK(sq.shift(Int(1)) == IntPoly({1, 2, 1}));

    RatPoly p({Rat(1, 6), Rat(-1), Rat(1)});
    const Rat a(3, 7);
    const Rat x0(-2, 5);
    CHECK(p.shift(a).eval(x0) == p.eval(x0 + a));
    CHECK(p.shift(a).shift(-a) == p);
}

TEST_CASE("multiplication and division by x") {
    IntPoly p({0, -1, 3});
    CHECK(p.div_x() == IntPoly({-1, 3}));
    CHECK(p.div_x().mul_x() == p);
    CHECK(IntPoly().div_x().is_zero());
    CHECK_THROWS_AS(IntPoly({1, 1}).div_x(), std::invalid_argument);
}

TEST_CASE("polynomial serialization") {
    IntPoly p({0, -1, 3});
    CHECK(poly_coeff_strings(p) == std::vector<std::string>{"0", "-1", "3"});
    CHECK(poly_coeff_strings(IntPoly()).empty());
    CHECK(poly_to_pretty(p) == "3x^2 - x");
    CHECK(poly_to_pretty(IntPoly::constant(1)) == "1");
    CHECK(poly_to_pretty(IntPoly()) == "0");
    CHECK(poly_to_pretty(RatPoly({Rat(1, 6), Rat(-1), Rat(1)})) == "x^2 - x + 1/6");
    CHECK(poly_to_pretty(IntPoly({0, 1})) == "x");
    CHECK(poly_to_pretty(IntPoly({-2, 0, 0, -7})) == "-7x^3 - 2");
}

TEST_CASE("integer/rational polynomial conversions") {
    IntPoly p({0, -1, 3});
    RatPoly r = to_rat_poly(p);
    CHECK(r.coeff(2) == 3);
    auto back = try_to_int_poly(r);
    REQUIRE(back.has_value());
    CHECK(*back == p);
    CHECK(!try_to_int_poly(RatPoly({Rat(1, 2)})).has_value());
}

TEST_CASE("derivative matches the finite-difference quotient to first order") {
    const RatPoly p({Rat(7), Rat(-1), Rat(0), Rat(3)});  // 3x^3 - x + 7
    const Rat h = pow2(-20);
    for (const Rat& x0 : {Rat(0), Rat(1), Rat(-2, 3), Rat(5, 4)}) {
        const Rat quotient = (p.eval(x0 + h) - p.eval(x0)) / h;
        const Rat diff = quotient - p.derivative().eval(x0);
        // |p''| / 2 stays below 2^7 on the sample points.
        CHECK(abs(diff) <= h * Rat(128));
        CHECK(diff != 0);  // the quotient is close but not exact
    }
}

TEST_CASE("bivariate series: construction and termwise operations") {
    CHECK_THROWS_AS(Biseries(std::vector<RatPoly>{}), std::invalid_argument);

    Biseries one = Biseries::one(4);
    CHECK(one.order() == 4);
    CHECK(one.term(0) == RatPoly::constant(Rat(1)));
    CHECK(one.term(3).is_zero());
    CHECK_THROWS_AS(one.term(5), std::out_of_range);

    Biseries z = Biseries::zero(4);
    CHECK((one - one) == z);
    CHECK((one + z) == one);
}

TEST_CASE("series exponentials multiply to one") {
    const RatPoly x = RatPoly::x();
    const std::vector<RatPoly> small_series[] = {
        {RatPoly(), x},
        {RatPoly(), x * Rat(-1, 2), x * x},
        {RatPoly(), x + RatPoly::constant(Rat(1, 3)), RatPoly(), x * Rat(5)},
    };
    for (const auto& terms : small_series) {
        std::vector<RatPoly> padded = terms;
        padded.resize(13, RatPoly());
        Biseries u(padded);
        CHECK(biseries_mul(biseries_exp(u), biseries_exp(Biseries::zero(12) - u)) ==
              Biseries::one(12));
    }
}

TEST_CASE("series exponential of a single term gives factorial coefficients") {
    std::vector<RatPoly> terms(7, RatPoly());
    terms[1] = RatPoly::x();
    Biseries e = biseries_exp(Biseries(terms));
    for (unsigned n = 0; n <= 6; ++n) {
        std::vector<Rat> c(n + 1, Rat(0));
        c[n] = Rat(1) / Rat(factorial(n));
        CHECK(e.term(n) == RatPoly(c));
    }
    CHECK_THROWS_AS(biseries_exp(Biseries::one(3)), std::invalid_argument);
}

TEST_CASE("series division inverts multiplication") {
    std::vector<RatPoly> a_terms{RatPoly::constant(Rat(2)), RatPoly::x(),
                                 RatPoly({Rat(1, 3), Rat(0), Rat(-1)})};
    std::vector<RatPoly> b_terms{RatPoly::constant(Rat(1)), RatPoly({Rat(0), Rat(-2)}),
                                 RatPoly::constant(Rat(1, 5))};
    Biseries a(a_terms), b(b_terms);
    CHECK(biseries_mul(biseries_div(a, b), b) == a);
    CHECK(biseries_div(a, Biseries::one(2)) == a);

    std::vector<RatPoly> bad{RatPoly::x(), RatPoly::x()};
    CHECK_THROWS_AS(biseries_div(a, Biseries(bad)), std::invalid_argument);
}

TEST_CASE("termwise x-derivative of a series") {
    std::vector<RatPoly> terms{RatPoly({Rat(1), Rat(2), Rat(3)}), RatPoly::x()};
    Biseries s(terms);
    Biseries d = s.derivative_x();
    CHECK(d.term(0) == RatPoly({Rat(2), Rat(6)}));
    CHECK(d.term(1) == RatPoly::constant(Rat(1)));
}

TEST_CASE("exponential moments of monomials") {
    // int_0^inf e^{-cx} x^k dx = k!/c^{k+1}; with the extra 1/x, (k-1)!/c^k.
    for (unsigned k = 1; k <= 6; ++k) {
        std::vector<Rat> c(k + 1, Rat(0));
        c[k] = Rat(1);
        RatPoly mono(c);
        for (const Rat& cc : {Rat(1), Rat(2), Rat(1, 2), Rat(3, 7)}) {
            CHECK(exp_moment(mono, cc) == Rat(factorial(k)) / pow_rat(cc, static_cast<long>(k) + 1));
            CHECK(exp_moment_div_x(mono, cc) ==
                  Rat(factorial(k - 1)) / pow_rat(cc, static_cast<long>(k)));
        }
    }
}

TEST_CASE("exponential moments of concrete polynomials") {
    IntPoly p({0, 1, 1});  // x + x^2
    CHECK(exp_moment(p, Rat(2)) == Rat(1, 2));
    CHECK(exp_moment_div_x(p, Rat(1)) == 2);
    CHECK(exp_moment_div_x(IntPoly({0, 0, 0, 1}), Rat(3)) == Rat(2, 27));
    CHECK(exp_moment(IntPoly::constant(1), Rat(4)) == Rat(1, 4));
}

TEST_CASE("divergent moments are rejected, never regularized") {
    CHECK_THROWS_AS(exp_moment_div_x(IntPoly({1, 1}), Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(exp_moment_div_x(IntPoly({0, 1}), Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(exp_moment(IntPoly({0, 1}), Rat(-1)), std::invalid_argument);
}

TEST_CASE("the weighted moment is bilinear in the factors' coefficients") {
    const RatPoly p({Rat(0), Rat(1), Rat(-2)});          // x - 2x^2
    const RatPoly q({Rat(0), Rat(3), Rat(0), Rat(1)});   // 3x + x^3
    const RatPoly r({Rat(1), Rat(1)});                   // 1 + x
    const RatPoly s({Rat(2), Rat(0), Rat(-1, 3)});       // 2 - x^2/3
    const Rat a(2, 3), b(-5);
    for (const Rat& c : {Rat(1), Rat(7, 2)}) {
        CHECK(exp_moment_div_x((p * a + q * b) * r, c) ==
              exp_moment_div_x(p * r, c) * a + exp_moment_div_x(q * r, c) * b);
        CHECK(exp_moment_div_x(p * (r * a + s * b), c) ==
              exp_moment_div_x(p * r, c) * a + exp_moment_div_x(p * s, c) * b);
    }
}
