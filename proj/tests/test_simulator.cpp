#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "hawkes/ensemble.hpp"
#include "hawkes/errors.hpp"
#include "hawkes/simulator.hpp"
#include "hawkes/stats.hpp"

using namespace hawkes;

TEST_CASE("same seed reproduces the identical path") {
    const HawkesParams p(0.3, 1.0, 1.5, 20.0);
    const SimPath a = simulate_direct(p, 2.0, 99);
    const SimPath b = simulate_direct(p, 2.0, 99);
    CHECK(a.event_times == b.event_times);
    CHECK(a.z_at_events == b.z_at_events);
    const SimPath c = simulate_direct(p, 2.0, 100);
    CHECK(a.event_times != c.event_times);
}

TEST_CASE("path structure: decay between events, jump of alpha at events") {
    const HawkesParams p(0.0, 0.7, 1.3, 30.0);
    const SimPath path = simulate_direct(p, 3.0, 4242);
    REQUIRE(path.n_total() > 0);
    double z_prev = p.z0();
    double t_prev = 0.0;
    for (long k = 0; k < path.n_total(); ++k) {
        const double t = path.event_times[k];
        CHECK(t > t_prev);
        const double expected =
            z_prev * std::exp(-p.beta() * (t - t_prev)) + p.alpha();
        CHECK(path.z_at_events[k] == doctest::Approx(expected).epsilon(1e-9));
        z_prev = path.z_at_events[k];
        t_prev = t;
    }
    CHECK(t_prev <= 3.0);
}

TEST_CASE("counting identity ties N to Z and its integral") {
    // N_t = (Z_t - Z_0)/alpha + (beta/alpha) int_0^t Z ds, pathwise.
    const HawkesParams p(0.0, 1.1, 1.4, 25.0);
    const SimPath path = simulate_direct(p, 2.0, 7);
    const PathFunctionals f = evaluate_path(path);
    for (double t : {0.5, 1.0, 1.7, 2.0}) {
        const double lhs = f.n_of_t(t);
        const double rhs = (f.z_of_t(t) - p.z0()) / p.alpha() +
                           (p.beta() / p.alpha()) * f.integral_z(t);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
    CHECK_THROWS_AS(f.z_of_t(2.5), QueryOutOfRange);
    CHECK_THROWS_AS(f.integral_z(-0.1), QueryOutOfRange);
}

TEST_CASE("compensated count is mean zero across the ensemble") {
    const HawkesParams p(0.4, 1.0, 1.6, 15.0);
    const long paths = 3000;
    std::vector<double> residual(paths);
    for_each_path(paths, 555, 1, [&](long i, RngStream& rng) {
        const SimPath path = simulate_direct(p, 1.5, rng, 555);
        residual[i] = evaluate_path(path).martingale_residual(1.5);
    });
    const SampleSummary s = summarize(residual);
    CHECK(std::abs(s.mean) <= 4.0 * s.se_mean);
}

TEST_CASE("direct and cluster constructions give the same count law") {
    for (const auto& [alpha, beta] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}}) {
        const HawkesParams p(0.0, alpha, beta, 30.0);
        const long paths = 3000;
        std::vector<double> nd(paths), nc(paths);
        for_each_path(paths, 808, 1, [&](long i, RngStream& rng) {
            nd[i] = static_cast<double>(simulate_direct(p, 1.0, rng, 808).n_total());
        });
        for_each_path(paths, 809, 1, [&](long i, RngStream& rng) {
            nc[i] = static_cast<double>(simulate_cluster(p, 1.0, rng, 809).n_total());
        });
        const Chi2Result r = chi2_two_sample(nd, nc);
        CAPTURE(alpha);
        CAPTURE(beta);
        CHECK(r.p_value > 0.001);
    }
}

TEST_CASE("sub-critical total progeny matches the branching series") {
    // Each initial unit of excitation z0 produces on average
    // (alpha/beta)/(1 - alpha/beta) descendants per unit... summed over the
    // cascade the expected total count is z0/(beta - alpha).
    const HawkesParams p(0.0, 1.0, 2.0, 5.0);
    const double horizon = 20.0; // e^{-(beta-alpha)T} ~ 2e-9: effectively infinite
    const long paths = 4000;
    std::vector<double> counts(paths);
    for_each_path(paths, 31, 1, [&](long i, RngStream& rng) {
        counts[i] = static_cast<double>(simulate_cluster(p, horizon, rng, 31).n_total());
    });
    const SampleSummary s = summarize(counts);
    const double expected = p.z0() / (p.beta() - p.alpha());
    CHECK(std::abs(s.mean - expected) <= 4.0 * s.se_mean);
}

TEST_CASE("event cap throws and carries the partial path") {
    const HawkesParams p(0.0, 2.0, 1.0, 50.0);
    try {
        simulate_direct(p, 50.0, 12, 500);
        FAIL("expected EventCapExceeded");
    } catch (const EventCapExceeded& e) {
        CHECK(e.partial().n_total() == 500);
        CHECK(e.partial().event_times.back() < 50.0);
    }
}

TEST_CASE("streaming observation matches the materialized path") {
    const HawkesParams p(0.2, 1.0, 1.2, 40.0);
    const std::vector<double> times{0.25, 0.5, 1.0, 1.5};
    for (std::uint64_t i = 0; i < 5; ++i) {
        RngStream ra(2024, i), rb(2024, i);
        const PathObservation obs = observe_direct(p, times, ra);
        const SimPath path = simulate_direct(p, times.back(), rb, 2024);
        const PathFunctionals f = evaluate_path(path);
        for (std::size_t k = 0; k < times.size(); ++k) {
            CHECK(obs.z[k] == doctest::Approx(f.z_of_t(times[k])).epsilon(1e-9));
            CHECK(static_cast<double>(obs.n[k]) == f.n_of_t(times[k]));
        }
    }
}

TEST_CASE("CSV writer emits the documented shape") {
    const HawkesParams p(0.0, 1.0, 1.0, 3.0);
    const SimPath path = simulate_direct(p, 1.0, 5);
    std::ostringstream os;
    write_path_csv(os, path);
    const std::string out = os.str();
    CHECK(out.rfind("# hawkes-path v1", 0) == 0);
    CHECK(out.find("event_time,z_after") != std::string::npos);
}
