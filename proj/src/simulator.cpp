#include "hawkes/simulator.hpp"

#include "hawkes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace hawkes {

namespace {

// Solves mu dt + (Z/beta)(1 - e^{-beta dt}) = target for dt, mu > 0.
// The left side is concave increasing, so Newton started from the secant
// lower bound converges monotonically; bisection guards the bracket.
double invert_compensator(double mu, double beta, double z, double target) {
    const auto lambda_int = [&](double dt) {
        return mu * dt - (z / beta) * std::expm1(-beta * dt);
    };
    double lo = target / (mu + z);
    double hi = target / mu;
    double dt = lo;
    for (int i = 0; i < 200; ++i) {
        const double f = lambda_int(dt) - target;
        (f < 0.0 ? lo : hi) = dt;
        const double fp = mu + z * std::exp(-beta * dt);
        double next = dt - f / fp;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - dt) <= 1e-12 * next) {
            return next;
        }
        dt = next;
    }
    return dt;
}

// Shared stepping core. Emits each event through on_event(t, z_after);
// returning false from on_event aborts (cap exceeded).
template <class OnEvent>
void run_direct(const HawkesParams& p, double T, RngStream& rng,
                OnEvent&& on_event) {
    const double mu = p.mu();
    const double alpha = p.alpha();
    const double beta = p.beta();
    double t = 0.0;
    double z = p.z0();
    for (;;) {
        const double e = rng.exponential();
        double dt;
        double z_pre;
        if (mu == 0.0) {
            if (z <= 0.0) {
                return;
            }
            const double x = beta * e / z;
            if (x >= 1.0) {
                return; // compensator saturates below the draw
            }
            dt = -std::log1p(-x) / beta;
            z_pre = z - beta * e;
        } else {
            dt = invert_compensator(mu, beta, z, e);
            z_pre = z * std::exp(-beta * dt);
        }
        const double t_next = t + dt;
        if (t_next > T) {
            return;
        }
        t = t_next;
        z = z_pre + alpha;
        if (!on_event(t, z)) {
            return;
        }
    }
}

} // namespace

SimPath simulate_direct(const HawkesParams& p, double T, RngStream& rng,
                        std::uint64_t seed_label, long event_cap) {
    if (!(T > 0.0)) {
        throw std::invalid_argument("simulate_direct: T must be > 0");
    }
    SimPath path{p, T, seed_label, {}, {}};
    bool capped = false;
    run_direct(p, T, rng, [&](double t, double z) {
        if (path.n_total() >= event_cap) {
            capped = true;
            return false;
        }
        path.event_times.push_back(t);
        path.z_at_events.push_back(z);
        return true;
    });
    if (capped) {
        throw EventCapExceeded("simulate_direct: event cap exceeded", std::move(path));
    }
    return path;
}

SimPath simulate_direct(const HawkesParams& p, double T, std::uint64_t seed,
                        long event_cap) {
    RngStream rng(seed, 0);
    return simulate_direct(p, T, rng, seed, event_cap);
}

PathObservation observe_direct(const HawkesParams& p,
                               const std::vector<double>& times, RngStream& rng,
                               long event_cap) {
    PathObservation obs;
    obs.z.reserve(times.size());
    obs.n.reserve(times.size());
    const double beta = p.beta();
    double last_t = 0.0;
    double last_z = p.z0();
    long count = 0;
    std::size_t qi = 0;
    const double T = times.empty() ? 0.0 : times.back();
    bool capped = false;
    run_direct(p, T, rng, [&](double t, double z) {
        while (qi < times.size() && times[qi] < t) {
            obs.z.push_back(last_z * std::exp(-beta * (times[qi] - last_t)));
            obs.n.push_back(count);
            ++qi;
        }
        if (count >= event_cap) {
            capped = true;
            return false;
        }
        last_t = t;
        last_z = z;
        ++count;
        return true;
    });
    if (capped) {
        throw EventCapExceeded("observe_direct: event cap exceeded",
                               SimPath{p, T, 0, {}, {}});
    }
    while (qi < times.size()) {
        obs.z.push_back(last_z * std::exp(-beta * (times[qi] - last_t)));
        obs.n.push_back(count);
        ++qi;
    }
    return obs;
}

SimPath simulate_cluster(const HawkesParams& p, double T, RngStream& rng,
                         std::uint64_t seed_label, long event_cap) {
    if (!(T > 0.0)) {
        throw std::invalid_argument("simulate_cluster: T must be > 0");
    }
    const double alpha = p.alpha();
    const double beta = p.beta();
    const double q = -std::expm1(-beta * T); // 1 - e^{-beta T}

    std::vector<double> times;
    bool capped = false;
    const auto push = [&](double t) {
        if (static_cast<long>(times.size()) >= event_cap) {
            capped = true;
            return;
        }
        times.push_back(t);
    };

    // Ancestors of the initial excitation: inhomogeneous Poisson with rate
    // z0 e^{-beta t}, total mass z0 q / beta on [0, T].
    const long k0 = rng.poisson(p.z0() * q / beta);
    for (long i = 0; i < k0 && !capped; ++i) {
        const double u = rng.uniform();
        push(-std::log1p(-u * q) / beta);
    }
    // Base-rate immigrants.
    const long k1 = rng.poisson(p.mu() * T);
    for (long i = 0; i < k1 && !capped; ++i) {
        push(rng.uniform() * T);
    }

    // Breadth-first cascade; every recorded point spawns Poisson(alpha/beta)
    // children with Exp(beta) delays, discarded past the horizon before they
    // are enqueued.
    for (std::size_t head = 0; head < times.size() && !capped; ++head) {
        const double s = times[head];
        const long children = rng.poisson(alpha / beta);
        for (long c = 0; c < children && !capped; ++c) {
            const double ts = s + rng.exponential() / beta;
            if (ts <= T) {
                push(ts);
            }
        }
    }

    std::sort(times.begin(), times.end());
    SimPath path{p, T, seed_label, std::move(times), {}};
    path.z_at_events.resize(path.event_times.size());
    double z = p.z0();
    double last = 0.0;
    for (std::size_t k = 0; k < path.event_times.size(); ++k) {
        z = z * std::exp(-beta * (path.event_times[k] - last)) + alpha;
        last = path.event_times[k];
        path.z_at_events[k] = z;
    }
    if (capped) {
        throw EventCapExceeded("simulate_cluster: event cap exceeded", std::move(path));
    }
    return path;
}

SimPath simulate_cluster(const HawkesParams& p, double T, std::uint64_t seed,
                         long event_cap) {
    RngStream rng(seed, 0);
    return simulate_cluster(p, T, rng, seed, event_cap);
}

PathFunctionals::PathFunctionals(const SimPath& path)
    : mu_(path.params.mu()),
      alpha_(path.params.alpha()),
      beta_(path.params.beta()),
      z0_(path.params.z0()),
      horizon_(path.horizon),
      times_(path.event_times),
      z_after_(path.z_at_events) {
    int_prefix_.resize(times_.size());
    double acc = 0.0;
    double z = z0_;
    double last = 0.0;
    for (std::size_t k = 0; k < times_.size(); ++k) {
        acc += -(z / beta_) * std::expm1(-beta_ * (times_[k] - last));
        int_prefix_[k] = acc;
        z = z_after_[k];
        last = times_[k];
    }
}

std::size_t PathFunctionals::segment_of(double t) const {
    if (t < 0.0 || t > horizon_) {
        throw QueryOutOfRange("PathFunctionals: t outside [0, T]");
    }
    // Number of events with time <= t.
    return static_cast<std::size_t>(
        std::upper_bound(times_.begin(), times_.end(), t) - times_.begin());
}

double PathFunctionals::n_of_t(double t) const {
    return static_cast<double>(segment_of(t));
}

double PathFunctionals::z_of_t(double t) const {
    const std::size_t k = segment_of(t);
    const double z = (k == 0) ? z0_ : z_after_[k - 1];
    const double t0 = (k == 0) ? 0.0 : times_[k - 1];
    return z * std::exp(-beta_ * (t - t0));
}

double PathFunctionals::integral_z(double t) const {
    const std::size_t k = segment_of(t);
    const double z = (k == 0) ? z0_ : z_after_[k - 1];
    const double t0 = (k == 0) ? 0.0 : times_[k - 1];
    const double base = (k == 0) ? 0.0 : int_prefix_[k - 1];
    return base - (z / beta_) * std::expm1(-beta_ * (t - t0));
}

double PathFunctionals::martingale_residual(double t) const {
    return n_of_t(t) - mu_ * t - integral_z(t);
}

PathFunctionals evaluate_path(const SimPath& path) { return PathFunctionals(path); }

void write_path_csv(std::ostream& os, const SimPath& path) {
    os << "# hawkes-path v1\n";
    os << "# params " << path.params.to_json() << " horizon=" << path.horizon
       << " seed=" << path.seed << "\n";
    os << "event_time,z_after\n";
    os.precision(17);
    for (std::size_t k = 0; k < path.event_times.size(); ++k) {
        os << path.event_times[k] << ',' << path.z_at_events[k] << '\n';
    }
}

} // namespace hawkes
