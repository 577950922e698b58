#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hawkes/affine.hpp"
#include "hawkes/errors.hpp"
#include "hawkes/limits.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/stats.hpp"

using namespace hawkes;

TEST_CASE("fluctuation variance equals twice the second expansion coefficient") {
    for (const auto& [alpha, beta] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}}) {
        const HawkesParams p(0.0, alpha, beta, 1.0);
        for (double t : {0.3, 1.0, 2.0}) {
            CHECK(cov_g(p, t, t) ==
                  doctest::Approx(2.0 * expansion_f(p, t).f2).epsilon(1e-12));
        }
    }
}

TEST_CASE("covariance basics") {
    const HawkesParams p(0.0, 1.5, 1.0, 1.0);
    CHECK(cov_g(p, 0.4, 1.1) == cov_g(p, 1.1, 0.4));
    CHECK(cov_g(p, 0.0, 1.0) == 0.0);
    // At the critical point the covariance is Brownian-like.
    const HawkesParams crit(0.0, 2.0, 2.0, 1.0);
    CHECK(cov_g(crit, 0.3, 0.8) == doctest::Approx(4.0 * 0.3).epsilon(1e-12));
}

TEST_CASE("Z-fluctuation covariance is Markov, N-fluctuation is not") {
    const HawkesParams p(0.0, 1.3, 1.0, 1.0);
    RngStream rng(2718, 0);
    // Product criterion gamma(s,u) gamma(t,t) = gamma(s,t) gamma(t,u) for
    // s <= t <= u characterizes Markov Gaussian covariances.
    for (int i = 0; i < 100; ++i) {
        double s = 2.0 * rng.uniform();
        double t = 2.0 * rng.uniform();
        double u = 2.0 * rng.uniform();
        if (s > t) std::swap(s, t);
        if (t > u) std::swap(t, u);
        if (s > t) std::swap(s, t);
        const double lhs = cov_g(p, s, u) * cov_g(p, t, t);
        const double rhs = cov_g(p, s, t) * cov_g(p, t, u);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
    // One fixed triple suffices to break the criterion for the N-limit.
    const double s = 0.4, t = 0.9, u = 1.6;
    const double lhs = cov_h(p, s, u) * cov_h(p, t, t);
    const double rhs = cov_h(p, s, t) * cov_h(p, t, u);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) > 1e-3);
}

TEST_CASE("Gram matrices of both covariances are positive semidefinite") {
    const HawkesParams p(0.0, 1.2, 1.0, 1.0);
    RngStream rng(577, 0);
    for (int rep = 0; rep < 3; ++rep) {
        std::vector<double> pts(5);
        for (auto& x : pts) {
            x = 0.05 + 2.0 * rng.uniform();
        }
        std::vector<double> gram(25);
        double trace = 0.0;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                gram[i * 5 + j] = cov_g(p, pts[i], pts[j]);
            }
            trace += gram[i * 5 + i];
        }
        CHECK(smallest_eigenvalue(gram, 5) >= -1e-9 * trace);
    }
    // One (slower) check for the N-limit covariance.
    const std::vector<double> pts{0.3, 0.7, 1.1, 1.6, 2.0};
    std::vector<double> gram(25);
    double trace = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = i; j < 5; ++j) {
            gram[i * 5 + j] = gram[j * 5 + i] = cov_h(p, pts[i], pts[j]);
        }
        trace += gram[i * 5 + i];
    }
    CHECK(smallest_eigenvalue(gram, 5) >= -1e-9 * trace);
}

TEST_CASE("critical N-fluctuation variance has a hand-derived closed form") {
    // At alpha = beta the Z-limit is alpha W for a Brownian motion W, so
    // H = W + beta int W and Var(H_t) = t + beta t^2 + beta^2 t^3 / 3.
    for (double beta : {0.5, 1.0, 2.0}) {
        const HawkesParams p(0.0, beta, beta, 1.0);
        for (double t : {0.4, 1.0, 2.5}) {
            const double expected =
                t + beta * t * t + beta * beta * t * t * t / 3.0;
            CHECK(var_h(p, t) == doctest::Approx(expected).epsilon(1e-8));
        }
    }
}

TEST_CASE("non-critical N-fluctuation variance matches a dense Riemann oracle") {
    const HawkesParams p(0.0, 1.0, 1.6, 1.0);
    const double t = 1.2;
    const int m = 3000;
    const double h = t / m;
    double single = 0.0, dbl = 0.0;
    for (int i = 0; i < m; ++i) {
        const double u = (i + 0.5) * h;
        single += cov_g(p, u, t) * h;
        for (int j = 0; j < m; ++j) {
            const double v = (j + 0.5) * h;
            dbl += cov_g(p, u, v) * h * h;
        }
    }
    const double a2 = p.alpha() * p.alpha();
    const double b = p.beta();
    const double oracle =
        cov_g(p, t, t) / a2 + 2.0 * b / a2 * single + b * b / a2 * dbl;
    CHECK(var_h(p, t) == doctest::Approx(oracle).epsilon(1e-5));
}

TEST_CASE("passage probability behaves like a distribution function") {
    const HawkesParams p(0.0, 1.0, 1.0, 10000.0);
    const double t = 1.0;
    const double center = p.z0() * psi(p, t);
    CHECK(passage_time_cdf(p, center, t) == doctest::Approx(0.5).epsilon(1e-12));
    double prev = 1.1;
    for (double c : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const double v = passage_time_cdf(p, center + c * std::sqrt(p.z0()), t);
        CHECK(v < prev);
        prev = v;
    }
    // Monotone increasing in t at fixed K.
    CHECK(passage_time_cdf(p, center, 1.5) > passage_time_cdf(p, center, 0.8));
    CHECK_THROWS_AS(passage_time_cdf(p, -1.0, t), std::invalid_argument);
}

TEST_CASE("rescaled predictors and limit laws dispatch by regime") {
    const HawkesParams super(0.0, 2.0, 1.0, 1.0);
    const HawkesParams sub(0.0, 1.0, 2.0, 1.0);
    const HawkesParams crit(0.0, 1.0, 1.0, 1.0);

    const RescaledCurves c = lln_rescaled_curves(super, 0.5, 10000.0);
    CHECK(c.z_pred == 1.0);
    CHECK(c.n_pred == doctest::Approx(1.0 - 0.01));
    CHECK_THROWS_AS(lln_rescaled_curves(crit, 0.5, 100.0), WrongRegime);

    const auto xi = rescaled_limit_law(super, Regime::super_critical());
    CHECK(std::get<SuperCriticalXi>(xi).variance == doctest::Approx(4.0));
    const auto r = rescaled_limit_law(sub, Regime::sub_critical());
    CHECK(std::get<SubCriticalR>(r).variance == doctest::Approx(1.0));
    CHECK_THROWS_AS(rescaled_limit_law(sub, Regime::super_critical()), WrongRegime);

    const HawkesParams nearly(0.0, 1.0 - 0.5 / 100.0, 1.0, 100.0);
    const auto cir =
        rescaled_limit_law(nearly, Regime::nearly_critical(-0.5, 100.0));
    CHECK(std::get<CriticalCir>(cir).gamma == doctest::Approx(-0.5));
    CHECK_THROWS_AS(rescaled_limit_law(sub, Regime::nearly_critical(-0.5, 100.0)),
                    WrongRegime);
}

TEST_CASE("normal cdf reference values") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
    CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
    CHECK(normal_cdf(-8.0) == doctest::Approx(6.22096057427178e-16).epsilon(1e-6));
}
