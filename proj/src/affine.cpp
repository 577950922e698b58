#include "hawkes/affine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hawkes/errors.hpp"
#include "hawkes/quadrature.hpp"

namespace hawkes {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 5179.0 / 57600.0, e3 = 7571.0 / 16695.0,
                 e4 = 393.0 / 640.0, e5 = -92097.0 / 339200.0,
                 e6 = 187.0 / 2100.0, e7 = 1.0 / 40.0;
// Dense-output weights (Hairer, Norsett, Wanner).
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

} // namespace

double OdeSolutionA::eval(double t) const {
    if (t < grid_.front() - 1e-12 || t > grid_.back() + 1e-12) {
        throw QueryOutOfRange("OdeSolutionA::eval: t outside the solved range");
    }
    if (blew_up_at_ && t >= *blew_up_at_) {
        return kInf;
    }
    if (segments_.empty()) {
        return a0_; // constant solution (a0 == 0)
    }
    // Find the step containing t.
    auto it = std::upper_bound(
        segments_.begin(), segments_.end(), t,
        [](double x, const Segment& s) { return x < s.t0; });
    if (it != segments_.begin()) {
        --it;
    }
    const Segment& s = *it;
    const double th = std::clamp((t - s.t0) / s.h, 0.0, 1.0);
    const double th1 = 1.0 - th;
    return s.r1 + th * (s.r2 + th1 * (s.r3 + th * (s.r4 + th1 * s.r5)));
}

OdeSolutionA solve_a(const HawkesParams& p, double a0, const TimeGrid& grid) {
    const double alpha = p.alpha();
    const double beta = p.beta();
    const double a_blow = 500.0 / alpha;
    const auto rhs = [alpha, beta](double a) {
        return std::expm1(alpha * a) - beta * a;
    };

    OdeSolutionA sol;
    sol.a0_ = a0;
    sol.grid_ = grid.points();
    sol.values_.assign(grid.size(), kInf);
    sol.values_[0] = a0;

    if (a0 == 0.0) {
        // A == 0 is a fixed point; the solution is identically zero.
        std::fill(sol.values_.begin(), sol.values_.end(), 0.0);
        return sol;
    }

    const double t_end = grid.t1();
    double t = grid.t0();
    double y = a0;
    double k1 = rhs(y);
    double h = std::min(1e-4, t_end - t);
    constexpr double rtol = 1e-10;
    constexpr double atol = 1e-14;
    std::size_t next_grid = 1;
    long max_steps = 100000000;

    while (t < t_end) {
        if (--max_steps <= 0) {
            throw std::runtime_error("solve_a: step budget exhausted");
        }
        h = std::min(h, t_end - t);
        const double k2 = rhs(y + h * a21 * k1);
        const double k3 = rhs(y + h * (a31 * k1 + a32 * k2));
        const double k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 =
            rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const double ynew =
            y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const double k7 = rhs(ynew);
        // Embedded 4th-order value for the error estimate.
        const double yhat =
            y + h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double sc = atol + rtol * std::max(std::abs(y), std::abs(ynew));
        const double err = std::abs(ynew - yhat) / sc;

        const bool finite = std::isfinite(ynew) && std::isfinite(k7);
        if (!finite || err > 1.0) {
            const double shrink = finite
                ? std::max(0.2, 0.9 * std::pow(err, -0.2))
                : 0.2;
            h *= shrink;
            if (h < 1e-15 * std::max(1.0, t)) {
                // Step size collapsed against runaway growth: blow-up here.
                sol.blew_up_at_ = t;
                return sol;
            }
            continue;
        }

        // Accept; record dense-output segment.
        OdeSolutionA::Segment seg;
        seg.t0 = t;
        seg.h = h;
        const double ydiff = ynew - y;
        const double bspl = h * k1 - ydiff;
        seg.r1 = y;
        seg.r2 = ydiff;
        seg.r3 = bspl;
        seg.r4 = ydiff - h * k7 - bspl;
        seg.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
        sol.segments_.push_back(seg);

        const double t_next = t + h;
        if (ynew >= a_blow) {
            // Locate the crossing inside the step with the dense polynomial.
            double lo = 0.0, hi = 1.0;
            const auto at = [&seg](double th) {
                const double th1 = 1.0 - th;
                return seg.r1 +
                       th * (seg.r2 + th1 * (seg.r3 + th * (seg.r4 + th1 * seg.r5)));
            };
            for (int i = 0; i < 80; ++i) {
                const double mid = 0.5 * (lo + hi);
                (at(mid) >= a_blow ? hi : lo) = mid;
            }
            const double t_blow = t + hi * h;
            sol.blew_up_at_ = t_blow;
            while (next_grid < sol.grid_.size() && sol.grid_[next_grid] < t_blow) {
                sol.values_[next_grid] = sol.eval(sol.grid_[next_grid]);
                ++next_grid;
            }
            return sol;
        }

        while (next_grid < sol.grid_.size() && sol.grid_[next_grid] <= t_next) {
            sol.values_[next_grid] = sol.eval(sol.grid_[next_grid]);
            ++next_grid;
        }

        t = t_next;
        y = ynew;
        k1 = k7;
        const double grow = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::clamp(grow, 0.2, 5.0);
    }
    // Close any grid points left by rounding of the final step.
    while (next_grid < sol.grid_.size()) {
        sol.values_[next_grid] = sol.values_[next_grid - 1];
        ++next_grid;
    }
    return sol;
}

double a_critical_root(double alpha, double beta) {
    if (!(alpha < beta)) {
        throw std::invalid_argument("a_critical_root: requires alpha < beta");
    }
    // g(A) = e^{alpha A} - beta A - 1 is convex with g(0) = 0, g'(0) < 0, so
    // the positive root is unique. Bracket then Newton.
    double hi = 1.0;
    const auto g = [&](double a) { return std::expm1(alpha * a) - beta * a; };
    while (g(hi) < 0.0) {
        hi *= 2.0;
    }
    double lo = 0.0;
    double x = hi;
    for (int i = 0; i < 200; ++i) {
        const double gx = g(x);
        const double gpx = alpha * std::exp(alpha * x) - beta;
        double xn = x - gx / gpx;
        if (!(xn > lo && xn < hi)) {
            xn = 0.5 * (lo + hi);
        }
        (g(xn) > 0.0 ? hi : lo) = xn;
        if (std::abs(xn - x) <= 1e-15 * std::max(1.0, std::abs(x))) {
            return xn;
        }
        x = xn;
    }
    return x;
}

namespace {

// Level-set integral Phi(theta) = int_theta^inf dA / (e^{alpha A} - beta A - 1).
// Strictly decreasing in theta on the domain where the denominator is
// positive; theta_c(t) is its preimage of t.
double level_integral(double alpha, double beta, double theta) {
    const auto integrand = [alpha, beta](double a) {
        return 1.0 / (std::expm1(alpha * a) - beta * a);
    };
    double total = 0.0;
    const double split = std::max(theta, 1.0);
    if (theta < split) {
        total += integrate(integrand, theta, split, 1e-12);
    }
    // Tail via u = e^{-alpha A}: integrand du / (alpha (1 + u((beta/alpha) ln u - 1))).
    const double u1 = std::exp(-alpha * split);
    const auto tail = [alpha, beta](double u) {
        if (u <= 0.0) {
            return 1.0 / alpha;
        }
        return 1.0 / (alpha * (1.0 + u * ((beta / alpha) * std::log(u) - 1.0)));
    };
    total += integrate(tail, 0.0, u1, 1e-12);
    return total;
}

} // namespace

ThetaCritical theta_critical(const HawkesParams& p, double t) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("theta_critical: t must be > 0");
    }
    const double alpha = p.alpha();
    const double beta = p.beta();
    const bool sub = !p.is_critical_branch() && alpha < beta;
    const double floor = sub ? a_critical_root(alpha, beta) : 0.0;

    if (sub) {
        // If even just above A_c the integral cannot reach t, theta_c has
        // converged to A_c within reporting precision.
        const double probe = floor * (1.0 + 1e-9);
        if (level_integral(alpha, beta, probe) <= t) {
            return {t, floor, true};
        }
    }

    // Bracket: Phi decreases from +inf at the floor to 0 at infinity.
    double hi = std::max(1.0, 2.0 * floor);
    while (level_integral(alpha, beta, hi) > t) {
        hi *= 2.0;
        if (hi > 1e12) {
            throw std::runtime_error("theta_critical: bracket search failed");
        }
    }
    double lo = floor;
    // Shrink towards the floor until Phi(lo) > t (guaranteed by divergence).
    double probe_gap = 0.5 * (hi - floor);
    while (true) {
        const double cand = floor + probe_gap;
        if (level_integral(alpha, beta, cand) > t) {
            lo = cand;
            break;
        }
        hi = cand;
        probe_gap *= 0.5;
        if (probe_gap < 1e-300) {
            return {t, floor, true};
        }
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (level_integral(alpha, beta, mid) > t ? lo : hi) = mid;
        if (hi - lo <= 1e-10 * hi) {
            break;
        }
    }
    return {t, 0.5 * (lo + hi), false};
}

double mgf(const HawkesParams& p, double t, double theta) {
    if (p.mu() != 0.0) {
        throw UnsupportedCase("mgf: transform requires mu = 0");
    }
    if (t < 0.0) {
        throw std::invalid_argument("mgf: t must be >= 0");
    }
    if (theta == 0.0) {
        return 1.0;
    }
    if (t == 0.0) {
        return std::exp(-theta * p.z0());
    }
    if (theta < 0.0) {
        const ThetaCritical tc = theta_critical(p, t);
        if (-theta >= tc.value) {
            throw BeyondCriticalThreshold(
                "mgf: -theta is at or beyond theta_c(t); exponential moment blows up");
        }
    }
    const TimeGrid grid(0.0, t, 2);
    const OdeSolutionA sol = solve_a(p, -theta, grid);
    if (sol.blew_up_at()) {
        throw BeyondCriticalThreshold("mgf: transform exponent blew up before t");
    }
    return std::exp(sol.values().back() * p.z0());
}

ExpansionF expansion_f(const HawkesParams& p, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("expansion_f: t must be >= 0");
    }
    const double a = p.alpha();
    const double d = p.is_critical_branch() ? 0.0 : p.drift();
    const double e1t = std::exp(d * t);
    // f2 = (a^2 / 2d)(e^{2dt} - e^{dt}) = (a^2/2) e^{dt} t phi(dt)
    const double f2 = 0.5 * a * a * e1t * t * expm1_over_x(d * t);
    return {e1t, f2};
}

} // namespace hawkes
