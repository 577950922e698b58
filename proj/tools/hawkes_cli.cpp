// Command-line front end: composes the library modules into runnable
// experiments and CSV/JSON emitters. This is the only component that owns a
// worker pool; everything below it is pure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hawkes/affine.hpp"
#include "hawkes/cir.hpp"
#include "hawkes/ensemble.hpp"
#include "hawkes/errors.hpp"
#include "hawkes/limits.hpp"
#include "hawkes/moments.hpp"
#include "hawkes/params.hpp"
#include "hawkes/simulator.hpp"
#include "hawkes/validation.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20200317; // documented default

// Writes atomically: temp file in the target directory, then rename. An
// empty path means stdout.
void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw std::runtime_error("cannot open output file: " + tmp.string());
        }
        os << content;
        if (!os.flush()) {
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw std::runtime_error("cannot read file: " + path);
    }
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

// Shared model-parameter flags: optional JSON file plus inline flags, with
// inline flags taking precedence over the file.
struct ParamFlags {
    std::string file;
    std::optional<double> mu, alpha, beta, z0;

    void attach(CLI::App* app) {
        app->add_option("--params", file, "JSON file {\"mu\",\"alpha\",\"beta\",\"z0\"}");
        app->add_option("--mu", mu, "baseline intensity (overrides file)");
        app->add_option("--alpha", alpha, "jump size (overrides file)");
        app->add_option("--beta", beta, "decay rate (overrides file)");
        app->add_option("--z0", z0, "initial excitation (overrides file)");
    }

    hawkes::HawkesParams resolve() const {
        double m = 0.0, a = 1.0, b = 1.0, z = 1.0;
        bool have = false;
        if (!file.empty()) {
            const auto p = hawkes::HawkesParams::from_json(read_file(file));
            m = p.mu();
            a = p.alpha();
            b = p.beta();
            z = p.z0();
            have = true;
        }
        if (!have && !(alpha && beta)) {
            throw CLI::ValidationError(
                "--params", "need a params file or inline --alpha/--beta flags");
        }
        if (mu) m = *mu;
        if (alpha) a = *alpha;
        if (beta) b = *beta;
        if (z0) z = *z0;
        return hawkes::HawkesParams(m, a, b, z);
    }
};

std::string csv_header(const std::string& cols) { return cols + "\n"; }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear Hawkes process toolkit: simulation, transforms, "
                 "limit laws, Monte Carlo validation"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    int workers = hawkes::default_workers();
    std::string out;
    app.add_option("--seed", seed, "master seed (default " +
                                       std::to_string(kDefaultSeed) + ")");
    app.add_option("--workers", workers,
                   "worker count; 1 is serial and bit-identical to parallel");
    app.add_option("-o,--out", out, "output file (.csv/.json); default stdout");

    // simulate
    auto* sim = app.add_subcommand("simulate", "one exact trajectory as CSV");
    ParamFlags sim_p;
    sim_p.attach(sim);
    double sim_T = 1.0;
    long sim_cap = hawkes::kDefaultEventCap;
    bool sim_cluster = false;
    sim->add_option("--T", sim_T, "horizon")->required();
    sim->add_option("--event-cap", sim_cap, "explosion guard");
    sim->add_flag("--cluster", sim_cluster,
                  "use the immigration-birth construction instead");

    // moments
    auto* mom = app.add_subcommand("moments", "closed-form moments of Z_t as CSV");
    ParamFlags mom_p;
    mom_p.attach(mom);
    std::vector<double> mom_t;
    mom->add_option("--t", mom_t, "time list")->required();

    // mgf
    auto* mg = app.add_subcommand("mgf", "Laplace transform E[e^{-theta Z_t}]");
    ParamFlags mg_p;
    mg_p.attach(mg);
    std::vector<double> mg_t, mg_theta;
    mg->add_option("--t", mg_t, "time list")->required();
    mg->add_option("--theta", mg_theta, "transform-argument list")->required();

    // theta-c
    auto* tc = app.add_subcommand("theta-c",
                                  "critical exponential-moment threshold");
    ParamFlags tc_p;
    tc_p.attach(tc);
    std::vector<double> tc_t;
    tc->add_option("--t", tc_t, "time list")->required();

    // limit-law
    auto* ll = app.add_subcommand("limit-law",
                                  "rescaled-fluctuation limit law descriptor");
    ParamFlags ll_p;
    ll_p.attach(ll);
    std::string ll_regime;
    double ll_gamma = 0.0, ll_n = 1.0;
    ll->add_option("--regime", ll_regime, "sub|critical|super|nearly")
        ->required()
        ->check(CLI::IsMember({"sub", "critical", "super", "nearly"}));
    ll->add_option("--gamma", ll_gamma, "drift coefficient (nearly only)");
    ll->add_option("--n", ll_n, "scale index (nearly only)");

    // passage-time
    auto* pt = app.add_subcommand("passage-time",
                                  "normal approximation of P(tau_K <= t)");
    ParamFlags pt_p;
    pt_p.attach(pt);
    double pt_n = 0.0, pt_K = 0.0;
    std::vector<double> pt_t;
    pt->add_option("--n", pt_n, "initial excitation scale (sets z0)")->required();
    pt->add_option("--K", pt_K, "event-count level")->required();
    pt->add_option("--t", pt_t, "time list")->required();

    // cir
    auto* ci = app.add_subcommand("cir", "square-root diffusion paths as CSV");
    double ci_beta = 1.0, ci_gamma = 0.0, ci_mu = 0.0, ci_x0 = 1.0;
    double ci_t1 = 1.0;
    std::size_t ci_steps = 1000;
    long ci_paths = 1;
    bool ci_euler = false;
    ci->add_option("--beta", ci_beta, "diffusion scale")->required();
    ci->add_option("--gamma", ci_gamma, "linear drift coefficient");
    ci->add_option("--mu", ci_mu, "base drift");
    ci->add_option("--x0", ci_x0, "initial value");
    ci->add_option("--t1", ci_t1, "horizon");
    ci->add_option("--steps", ci_steps, "grid steps");
    ci->add_option("--paths", ci_paths, "number of paths");
    ci->add_flag("--euler", ci_euler, "full-truncation Euler instead of exact");

    // validate
    auto* va = app.add_subcommand("validate",
                                  "run a Monte Carlo experiment spec");
    std::string va_spec;
    bool va_no_retry = false;
    va->add_option("--spec", va_spec, "ExperimentSpec JSON file")->required();
    va->add_flag("--no-retry", va_no_retry, "disable the one-retry policy");

    for (auto* s : app.get_subcommands([](const CLI::App*) { return true; })) {
        s->fallthrough(); // global --seed/--workers/--out after the subcommand
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ostringstream os;
        if (sim->parsed()) {
            const auto p = sim_p.resolve();
            const auto path =
                sim_cluster ? hawkes::simulate_cluster(p, sim_T, seed, sim_cap)
                            : hawkes::simulate_direct(p, sim_T, seed, sim_cap);
            hawkes::write_path_csv(os, path);
        } else if (mom->parsed()) {
            const auto p = mom_p.resolve();
            os << csv_header("t,ez,ez2,ez3,var");
            for (double t : mom_t) {
                const auto m = hawkes::moments_of_z(p, t);
                os << fmt(t) << ',' << fmt(m.ez) << ',' << fmt(m.ez2) << ','
                   << fmt(m.ez3) << ',' << fmt(hawkes::variance_of_z(p, t))
                   << '\n';
            }
        } else if (mg->parsed()) {
            const auto p = mg_p.resolve();
            os << csv_header("t,theta,A,mgf");
            for (double t : mg_t) {
                for (double th : mg_theta) {
                    const double m = hawkes::mgf(p, t, th);
                    double a = -th;
                    if (t > 0.0) {
                        a = hawkes::solve_a(p, -th, hawkes::TimeGrid(0.0, t, 2))
                                .eval(t);
                    }
                    os << fmt(t) << ',' << fmt(th) << ',' << fmt(a) << ','
                       << fmt(m) << '\n';
                }
            }
        } else if (tc->parsed()) {
            const auto p = tc_p.resolve();
            os << csv_header("t,theta_c,saturated");
            for (double t : tc_t) {
                const auto r = hawkes::theta_critical(p, t);
                os << fmt(t) << ',' << fmt(r.value) << ','
                   << (r.saturated ? 1 : 0) << '\n';
            }
        } else if (ll->parsed()) {
            const auto p = ll_p.resolve();
            hawkes::Regime regime = hawkes::Regime::critical();
            if (ll_regime == "sub") regime = hawkes::Regime::sub_critical();
            if (ll_regime == "super") regime = hawkes::Regime::super_critical();
            if (ll_regime == "nearly") {
                regime = hawkes::Regime::nearly_critical(ll_gamma, ll_n);
            }
            const auto law = hawkes::rescaled_limit_law(p, regime);
            nlohmann::json j;
            if (const auto* xi = std::get_if<hawkes::SuperCriticalXi>(&law)) {
                j = {{"law", "super_constant_normal"},
                     {"variance", xi->variance}};
            } else if (const auto* r = std::get_if<hawkes::SubCriticalR>(&law)) {
                j = {{"law", "sub_white_normal"}, {"variance", r->variance}};
            } else {
                const auto& c = std::get<hawkes::CriticalCir>(law);
                j = {{"law", "cir"},
                     {"beta", c.beta},
                     {"gamma", c.gamma},
                     {"mu", c.mu},
                     {"x0", c.x0}};
            }
            os << j.dump(2) << '\n';
        } else if (pt->parsed()) {
            const auto base = pt_p.resolve();
            const hawkes::HawkesParams p(base.mu(), base.alpha(), base.beta(),
                                         pt_n);
            os << csv_header("t,prob");
            for (double t : pt_t) {
                os << fmt(t) << ',' << fmt(hawkes::passage_time_cdf(p, pt_K, t))
                   << '\n';
            }
        } else if (ci->parsed()) {
            const hawkes::CirParams c(ci_beta, ci_gamma, ci_mu, ci_x0);
            const hawkes::TimeGrid grid(0.0, ci_t1, ci_steps + 1);
            os << csv_header("path_id,t,x,integral_x");
            std::vector<std::vector<double>> xs(ci_paths), ixs(ci_paths);
            hawkes::for_each_path(ci_paths, seed, workers,
                                  [&](long i, hawkes::RngStream& rng) {
                auto path = ci_euler ? hawkes::simulate_cir_euler(c, grid, rng)
                                     : hawkes::simulate_cir_exact(c, grid, rng);
                xs[i] = std::move(path.x_values);
                ixs[i] = std::move(path.integral_x);
            });
            for (long i = 0; i < ci_paths; ++i) {
                for (std::size_t k = 0; k < grid.size(); ++k) {
                    os << i << ',' << fmt(grid[k]) << ',' << fmt(xs[i][k]) << ','
                       << fmt(ixs[i][k]) << '\n';
                }
            }
        } else if (va->parsed()) {
            auto spec = hawkes::ExperimentSpec::from_json(read_file(va_spec));
            if (app.count("--seed") > 0) {
                spec.master_seed = seed;
            }
            const auto report =
                va_no_retry ? hawkes::run_experiment(spec, workers)
                            : hawkes::run_experiment_with_retry(spec, workers);
            const bool json_out =
                out.size() >= 5 && out.substr(out.size() - 5) == ".json";
            os << (out.empty() || json_out ? report.to_json() + "\n"
                                           : report.to_table());
            std::cerr << report.to_table();
            emit(out, os.str());
            return report.pass ? 0 : 1;
        }
        emit(out, os.str());
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
