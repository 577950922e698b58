#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hawkes/errors.hpp"
#include "hawkes/params.hpp"
#include "hawkes/quadrature.hpp"

using namespace hawkes;

TEST_CASE("expm1_over_x agrees with the direct formula away from zero") {
    for (double x : {-3.0, -0.5, 0.25, 1.0, 4.0}) {
        CHECK(expm1_over_x(x) == doctest::Approx(std::expm1(x) / x).epsilon(1e-14));
    }
    CHECK(expm1_over_x(0.0) == 1.0);
    // The series branch agrees with the direct formula at the switch point,
    // where expm1(x)/x is still fully accurate.
    for (double x : {0.999e-6, -0.999e-6}) {
        CHECK(expm1_over_x(x) ==
              doctest::Approx(std::expm1(x) / x).epsilon(1e-14));
    }
}

TEST_CASE("psi equals the integral of the mean-growth factor") {
    // psi(t) = int_0^t e^{(alpha-beta)s} ds; the quadrature is the oracle.
    for (double d : {0.0, 1e-14, 1e-8, -1.0, 1.0}) {
        const HawkesParams p(0.0, 1.5 + d, 1.5, 10.0);
        for (double t : {0.3, 1.0, 2.5}) {
            const double oracle =
                integrate([&](double s) { return std::exp(d * s); }, 0.0, t, 1e-13);
            CHECK(psi(p, t) == doctest::Approx(oracle).epsilon(1e-10));
        }
    }
}

TEST_CASE("psi and mean_curve are continuous across the critical branch") {
    const HawkesParams crit(0.0, 2.0, 2.0, 50.0);
    const HawkesParams near_lo(0.0, 2.0 - 1e-9, 2.0, 50.0);
    const HawkesParams near_hi(0.0, 2.0 + 1e-9, 2.0, 50.0);
    for (double t : {0.5, 1.0, 3.0}) {
        CHECK(psi(crit, t) == doctest::Approx(psi(near_lo, t)).epsilon(1e-8));
        CHECK(psi(crit, t) == doctest::Approx(psi(near_hi, t)).epsilon(1e-8));
        CHECK(mean_curve(crit, t) ==
              doctest::Approx(mean_curve(near_hi, t)).epsilon(1e-7));
    }
}

TEST_CASE("mean_curve solves the drift ODE") {
    const HawkesParams p(0.0, 2.0, 1.0, 100.0);
    // m'(t) = (alpha - beta) m(t), checked by central difference.
    const double t = 0.7;
    const double h = 1e-6;
    const double deriv = (mean_curve(p, t + h) - mean_curve(p, t - h)) / (2.0 * h);
    CHECK(deriv == doctest::Approx(p.drift() * mean_curve(p, t)).epsilon(1e-8));
    CHECK(mean_curve(p, 0.0) == 100.0);
}

TEST_CASE("mean_curve rejects mu > 0") {
    const HawkesParams p(0.5, 1.0, 2.0, 10.0);
    CHECK_THROWS_AS(mean_curve(p, 1.0), UnsupportedCase);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(HawkesParams(-1.0, 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(HawkesParams(0.0, -1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(HawkesParams(0.0, 1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(HawkesParams(0.0, 1.0, 1.0, -2.0), std::invalid_argument);
}

TEST_CASE("params JSON round-trip") {
    const HawkesParams p(0.25, 1.5, 2.0, 1000.0);
    const HawkesParams q = HawkesParams::from_json(p.to_json());
    CHECK(q.mu() == p.mu());
    CHECK(q.alpha() == p.alpha());
    CHECK(q.beta() == p.beta());
    CHECK(q.z0() == p.z0());
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(HawkesParams(0, 1.0, 2.0, 1)).tag ==
          RegimeTag::SubCritical);
    CHECK(classify_regime(HawkesParams(0, 2.0, 1.0, 1)).tag ==
          RegimeTag::SuperCritical);
    CHECK(classify_regime(HawkesParams(0, 1.0, 1.0, 1)).tag == RegimeTag::Critical);
    // Within the tolerance band counts as critical.
    CHECK(classify_regime(HawkesParams(0, 1.0 + 1e-14, 1.0, 1)).tag ==
          RegimeTag::Critical);
    const Regime nc = Regime::nearly_critical(-0.5, 100.0);
    CHECK(nc.tag == RegimeTag::NearlyCritical);
    CHECK(nc.gamma == -0.5);
}

TEST_CASE("time grid validation") {
    CHECK_THROWS_AS(TimeGrid(1.0, 0.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid(std::vector<double>{0.0, 0.5, 0.5}),
                    std::invalid_argument);
    const TimeGrid g(0.0, 2.0, 5);
    CHECK(g.size() == 5);
    CHECK(g[0] == 0.0);
    CHECK(g[4] == 2.0);
    CHECK(g[2] == doctest::Approx(1.0));
}

TEST_CASE("quadrature handles an integrable endpoint singularity") {
    // int_0^1 x^{-1/2} dx = 2, a log-free but singular edge.
    const double v = integrate([](double x) { return 1.0 / std::sqrt(x); },
                               1e-300, 1.0, 1e-9);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-6));
    // Smooth case to near machine precision.
    const double w = integrate([](double x) { return std::cos(x); }, 0.0, 1.0);
    CHECK(w == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
}
