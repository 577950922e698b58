#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hawkes/affine.hpp"
#include "hawkes/ensemble.hpp"
#include "hawkes/moments.hpp"
#include "hawkes/simulator.hpp"
#include "hawkes/stats.hpp"

using namespace hawkes;

TEST_CASE("moments at t = 0 reduce to powers of z0") {
    const HawkesParams p(0.0, 1.3, 0.9, 7.0);
    const MomentSet m = moments_of_z(p, 0.0);
    CHECK(m.ez == 7.0);
    CHECK(m.ez2 == doctest::Approx(49.0));
    CHECK(m.ez3 == doctest::Approx(343.0));
    CHECK(variance_of_z(p, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("moment formulas are continuous across the critical branch") {
    const HawkesParams crit(0.0, 1.0, 1.0, 100.0);
    const HawkesParams near(0.0, 1.0 + 1e-9, 1.0, 100.0);
    for (double t : {0.5, 1.0, 2.0}) {
        const MomentSet a = moments_of_z(crit, t);
        const MomentSet b = moments_of_z(near, t);
        CHECK(a.ez == doctest::Approx(b.ez).epsilon(1e-7));
        CHECK(a.ez2 == doctest::Approx(b.ez2).epsilon(1e-7));
        CHECK(a.ez3 == doctest::Approx(b.ez3).epsilon(1e-7));
    }
}

TEST_CASE("moments match the Laplace transform by finite differences") {
    // E[Z] and E[Z^2] from central differences of theta -> E[e^{-theta Z}]
    // at theta = 0; the transform side comes from the ODE solver, so the two
    // derivations share no code.
    for (const auto& [alpha, beta] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}}) {
        const HawkesParams p(0.0, alpha, beta, 50.0);
        const double t = 0.8;
        const MomentSet m = moments_of_z(p, t);
        const double h = 1e-5 / m.ez;
        const double up = mgf(p, t, h);
        const double dn = mgf(p, t, -h);
        const double mid = mgf(p, t, 0.0);
        CHECK(mid == 1.0);
        const double d1 = -(up - dn) / (2.0 * h);
        const double d2 = (up - 2.0 * mid + dn) / (h * h);
        CAPTURE(alpha);
        CAPTURE(beta);
        CHECK(d1 == doctest::Approx(m.ez).epsilon(1e-5));
        CHECK(d2 == doctest::Approx(m.ez2).epsilon(1e-4));
    }
}

TEST_CASE("variance scaled by z0 approaches the fluctuation variance") {
    // Var(Z_t)/n -> cov_g(t,t)-style alpha^2 t at the critical point.
    const double t = 1.0;
    for (double n : {1e2, 1e4, 1e6}) {
        const HawkesParams p(0.0, 1.0, 1.0, n);
        CHECK(variance_of_z(p, t) / n == doctest::Approx(1.0 * t).epsilon(1e-9));
    }
}

TEST_CASE("closed forms match the simulator ensemble") {
    const HawkesParams p(0.0, 2.0, 1.0, 100.0);
    const double t = 0.5;
    const long paths = 20000;
    std::vector<double> z(paths);
    const std::vector<double> times{t};
    for_each_path(paths, 4711, 1, [&](long i, RngStream& rng) {
        z[i] = observe_direct(p, times, rng).z[0];
    });
    const SampleSummary s = summarize(z);
    const MomentSet m = moments_of_z(p, t);

    CHECK(std::abs(s.mean - m.ez) <= 4.0 * s.se_mean);

    // Variance within 4 SE, standard error from the fourth central moment.
    double m4 = 0.0;
    for (double v : z) {
        const double d = v - s.mean;
        m4 += d * d * d * d;
    }
    m4 /= static_cast<double>(paths);
    const double se_var = std::sqrt(
        (m4 - s.variance * s.variance) / static_cast<double>(paths));
    CHECK(std::abs(s.variance - variance_of_z(p, t)) <= 4.0 * se_var);

    // Third raw moment.
    std::vector<double> cubes(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        cubes[i] = z[i] * z[i] * z[i];
    }
    const SampleSummary c = summarize(cubes);
    CHECK(std::abs(c.mean - m.ez3) <= 4.0 * c.se_mean);
}

TEST_CASE("moment formulas reject mu > 0") {
    const HawkesParams p(0.1, 1.0, 1.0, 10.0);
    CHECK_THROWS(moments_of_z(p, 1.0));
}
