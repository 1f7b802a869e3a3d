#include <doctest.h>

#include <bez/integrate.hpp>
#include <bez/numreal.hpp>
#include <bez/special.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

using namespace bez;
namespace mp = boost::multiprecision;

namespace {

const Real kInf = std::numeric_limits<Real>::infinity();

bool close(const Real& got, const Real& want, long tol_exp) {
    return mp::abs(got - want) <= pow10_real(tol_exp) * std::max(Real(1), mp::abs(want));
}

}  // namespace

TEST_CASE("finite and semi-infinite integrals of smooth integrands") {
    PrecisionGuard guard(50);
    NumReal a = integrate([](const Real& x) -> Real { return x * x; }, Real(0), Real(1), 30);
    CHECK(close(a.value, Real(1) / 3, -28));
    CHECK(a.err <= pow10_real(-25));

    NumReal b = integrate([](const Real& x) -> Real { return mp::exp(-x); }, Real(0), kInf, 30);
    CHECK(close(b.value, Real(1), -28));
    CHECK(b.err <= pow10_real(-25));
}

TEST_CASE("raising the precision never raises the reported error") {
    PrecisionGuard guard(90);
    auto square = [](const Real& x) -> Real { return x * x; };
    auto decay = [](const Real& x) -> Real { return mp::exp(-x); };
    for (unsigned d = 20; d <= 40; d += 10) {
        CHECK(integrate(square, Real(0), Real(1), 2 * d).err <=
              integrate(square, Real(0), Real(1), d).err);
        CHECK(integrate(decay, Real(0), kInf, 2 * d).err <=
              integrate(decay, Real(0), kInf, d).err);
        CHECK(moment_I(3, 2 * d).err <= moment_I(3, d).err);
        CHECK(moment_M(3, 2 * d).err <= moment_M(3, d).err);
    }
}

TEST_CASE("non-finite integrand values raise instead of returning garbage") {
    CHECK_THROWS_AS(
        integrate([](const Real& x) -> Real { return mp::sqrt(x - 2); }, Real(0), Real(1), 20),
        QuadratureError);
    CHECK_THROWS_AS(
        integrate([](const Real& x) -> Real { return 1 / x; }, Real(0), Real(1), 20),
        QuadratureError);
}

TEST_CASE("endpoint-aware integration handles logarithmic endpoints") {
    // integral over (0,1) of log(x(1-x)) dx = -2; the integrand is rebuilt
    // from the distance to the nearest endpoint to dodge cancellation.
    PrecisionGuard guard(50);
    NumReal r = integrate_endpoint(
        [](const Real&, const Real& xc) -> Real {
            const Real d = mp::abs(xc);  // distance to the nearest endpoint
            return mp::log(d) + mp::log1p(-d);
        },
        Real(0), Real(1), 30);
    CHECK(close(r.value, Real(-2), -28));

    CHECK_THROWS_AS(integrate_endpoint(
                        [](const Real& x, const Real&) -> Real { return x; }, Real(0), kInf, 20),
                    QuadratureError);
}

TEST_CASE("modified Bessel function: frozen values on the sample grid") {
    PrecisionGuard guard(60);
    struct Sample {
        const char* nu;
        const char* x;
        const char* value;
    };
    const Sample table[] = {
        {"0", "0.5", "0.9244190712276658617819241675302169895388"},
        {"0", "1", "0.4210244382407083333356273792126090361362"},
        {"0", "2", "0.1138938727495334356527195749324818329983"},
        {"1/3", "0.5", "0.9890310742467242898582616604437628083221"},
        {"1/3", "1", "0.4384306334415343617131150105432629821955"},
        {"1/3", "2", "0.1165449612961652487589426289146328967532"},
        {"1/2", "0.5", "1.075047603499920238722755860248208511775"},
        {"1/2", "1", "0.4610685044478945584395758738756945896889"},
        {"1/2", "2", "0.1199377719680614473680365016367935162195"},
        {"1", "0.5", "1.656441120003300893696445403174091511534"},
        {"1", "1", "0.6019072301972345747375400015356173392616"},
        {"1", "2", "0.1398658818165224272845988070354110238872"},
    };
    for (const Sample& s : table) {
        CAPTURE(s.nu);
        CAPTURE(s.x);
        const Real nu = rat_to_real(rat_from_string(s.nu));
        const Real x(s.x);
        const Real want(s.value);
        NumReal a = bessel_k(nu, x, 30, BesselRoute::cosh_rep);
        NumReal b = bessel_k(nu, x, 30, BesselRoute::laplace_rep);
        CHECK(close(a.value, want, -27));
        CHECK(close(b.value, want, -27));
        // The two independent representations agree beyond the target.
        CHECK(mp::abs(a.value - b.value) <= pow10_real(-25));
    }
}

TEST_CASE("half-integer order reduces to the elementary closed form") {
    PrecisionGuard guard(60);
    const Real want = mp::sqrt(pi_real() / 2) * mp::exp(Real(-1));
    NumReal got = bessel_k(Real(1) / 2, Real(1), 30);
    CHECK(close(got.value, want, -26));
}

TEST_CASE("the kernel rejects the singular boundary") {
    CHECK_THROWS_AS(bessel_k(Real(0), Real(0), 20), std::domain_error);
    CHECK_THROWS_AS(bessel_k(Real(1), Real(-1), 20), std::domain_error);
    CHECK_THROWS_AS(bessel_k_imag(Real(1), Real(0), 20), std::domain_error);
}

TEST_CASE("imaginary-order kernel: frozen values") {
    PrecisionGuard guard(60);
    struct Sample {
        const char* tau;
        const char* x;
        const char* value;
    };
    const Sample table[] = {
        {"1", "1", "0.289428037025992127634567159241523027434"},
        {"0.5", "1", "0.3840430169050926986316187163060874002546"},
        {"0.5", "2", "0.1081283324091141337794067965091949364294"},
        {"1", "0.5", "0.4833960900438779740661014424899372051557"},
    };
    for (const Sample& s : table) {
        CAPTURE(s.tau);
        CAPTURE(s.x);
        NumReal got = bessel_k_imag(Real(s.tau), Real(s.x), 30);
        CHECK(close(got.value, Real(s.value), -27));
    }
    // At tau = 0 the kernel coincides with the real-order one.
    NumReal z = bessel_k_imag(Real(0), Real(1), 30);
    CHECK(close(z.value, Real("0.4210244382407083333356273792126090361362"), -27));
}

TEST_CASE("mathematical constants from accelerated series") {
    PrecisionGuard guard(60);
    CHECK(close(const_catalan(40).value,
                Real("0.91596559417721901505460351493238411077414937428167"), -38));
    CHECK(close(const_zeta(Real(3), 40).value,
                Real("1.2020569031595942853997381615114499907649862923405"), -38));
    CHECK(close(const_zeta(Real("2.5"), 40).value,
                Real("1.341487257250917179756769693348612136623"), -37));
    CHECK(close(const_zeta(Real("3.5"), 40).value,
                Real("1.126733867317056646427812491854984272222"), -37));
    CHECK(close(const_zeta_odd(0, 40).value,
                Real("1.2020569031595942853997381615114499907649862923405"), -38));
    CHECK(close(const_zeta_odd(1, 40).value,
                Real("1.0369277551433699263313654864570341680570809195019"), -38));
    CHECK_THROWS_AS(const_zeta(Real(1), 30), std::domain_error);
    CHECK_THROWS_AS(const_zeta(Real("0.5"), 30), std::domain_error);
}

TEST_CASE("power moments against the sine kernel: frozen values") {
    PrecisionGuard guard(60);
    // First moment is twice Catalan's constant.
    CHECK(close(moment_I(1, 40).value,
                Real("1.8319311883544380301092070298647682215482987485633"), -36));
    CHECK(close(moment_I(2, 40).value,
                Real("1.5479824021577423046560767677530206325522567769136"), -36));
    CHECK(close(moment_I(3, 40).value,
                Real("1.692992468413601244678013834898108708079"), -36));
    CHECK(close(moment_I(4, 40).value,
                Real("2.0531607314805916689565412960265113668565588445724"), -36));
    // Second moment against sin^2 is pi log 2.
    CHECK(close(moment_M(2, 40).value,
                Real("2.1775860903036021305006888982376139473385837003693"), -36));
    CHECK(close(moment_M(3, 40).value,
                Real("1.9754169770989024094612966914980158277167452687471"), -36));
    CHECK(close(moment_M(4, 40).value,
                Real("2.2491170739387729631748317472793009750368281412437"), -36));
    CHECK_THROWS_AS(moment_I(0, 30), std::invalid_argument);
    CHECK_THROWS_AS(moment_M(1, 30), std::invalid_argument);
}

TEST_CASE("closed-form couplings between the moments and the constants") {
    PrecisionGuard guard(60);
    const Real pi = pi_real();
    const Real log2 = mp::log(Real(2));
    const Real zeta3 = const_zeta_odd(0, 45).value;
    const Real catalan = const_catalan(45).value;

    CHECK(close(moment_I(1, 40).value, 2 * catalan, -36));
    CHECK(close(moment_M(2, 40).value, pi * log2, -36));
    // M_4 + (9 pi / 4) zeta(3) = (pi^3 / 2) log 2.
    CHECK(close(moment_M(4, 40).value + Real(9) * pi / 4 * zeta3,
                mp::pow(pi, 3) / 2 * log2, -35));
    // (7/2) zeta(3) + I_2 = 2 pi G.
    CHECK(close(Real(7) / 2 * zeta3 + moment_I(2, 40).value, 2 * pi * catalan, -35));
}

TEST_CASE("moments are symmetric under reflecting the interval") {
    PrecisionGuard guard(50);
    const Real half_pi = pi_real() / 2;
    auto direct_i = [](const Real& t) -> Real { return t * t * t / mp::sin(t); };
    auto reflect_i = [&](const Real& u) -> Real {
        const Real t = half_pi - u;
        return t * t * t / mp::cos(u);
    };
    NumReal di = integrate(direct_i, Real(0), half_pi, 30);
    NumReal ri = integrate(reflect_i, Real(0), half_pi, 30);
    CHECK(mp::abs(di.value - ri.value) <= pow10_real(-25));
    CHECK(mp::abs(di.value - moment_I(3, 30).value) <= pow10_real(-25));

    auto direct_m = [](const Real& t) -> Real {
        const Real s = mp::sin(t);
        return t * t * t / (s * s);
    };
    auto reflect_m = [&](const Real& u) -> Real {
        const Real t = half_pi - u;
        const Real c = mp::cos(u);
        return t * t * t / (c * c);
    };
    NumReal dm = integrate(direct_m, Real(0), half_pi, 30);
    NumReal rm = integrate(reflect_m, Real(0), half_pi, 30);
    CHECK(mp::abs(dm.value - rm.value) <= pow10_real(-25));
    CHECK(mp::abs(dm.value - moment_M(3, 30).value) <= pow10_real(-25));
}
