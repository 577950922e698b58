#include "hawkes/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hawkes/errors.hpp"
#include "hawkes/quadrature.hpp"

namespace hawkes {

double cov_g(const HawkesParams& p, double s, double t) {
    if (s < 0.0 || t < 0.0) {
        throw std::invalid_argument("cov_g: times must be >= 0");
    }
    if (s > t) {
        std::swap(s, t);
    }
    const double a = p.alpha();
    const double d = p.is_critical_branch() ? 0.0 : p.drift();
    // (a^2/d)(e^{d(t+s)} - e^{dt}) = a^2 e^{dt} s phi(ds)
    return a * a * std::exp(d * t) * s * expm1_over_x(d * s);
}

namespace {

// Integrates across a derivative kink at an interior knot by splitting
// there; the embedded error estimate is unreliable on panels that straddle
// the kink (both rules err alike), so an explicit split is needed.
double integrate_knotted(const std::function<double(double)>& f, double a,
                         double b, double knot, double tol) {
    if (knot <= a || knot >= b) {
        return integrate(f, a, b, tol);
    }
    return integrate(f, a, knot, 0.5 * tol) + integrate(f, knot, b, 0.5 * tol);
}

} // namespace

double cov_h(const HawkesParams& p, double s, double t) {
    if (s < 0.0 || t < 0.0) {
        throw std::invalid_argument("cov_h: times must be >= 0");
    }
    if (s == 0.0 || t == 0.0) {
        return 0.0;
    }
    const double a = p.alpha();
    const double b = p.beta();
    const double tmax = std::max(s, t);
    const double tol = 1e-11 * (1.0 + tmax * tmax);

    // cov_g has a derivative kink on the diagonal; every integral below is
    // split there so the quadrature only ever sees smooth pieces.
    const double single_s = integrate_knotted(
        [&](double u) { return cov_g(p, u, t); }, 0.0, s, t, tol);
    const double single_t = integrate_knotted(
        [&](double v) { return cov_g(p, s, v); }, 0.0, t, s, tol);
    const double dbl = integrate_knotted(
        [&](double v) {
            return integrate_knotted([&](double u) { return cov_g(p, u, v); },
                                     0.0, s, v, 0.1 * tol / (1.0 + tmax));
        },
        0.0, t, s, tol);
    return cov_g(p, s, t) / (a * a) + (b / (a * a)) * (single_s + single_t) +
           (b * b / (a * a)) * dbl;
}

double var_h(const HawkesParams& p, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("var_h: t must be >= 0");
    }
    return cov_h(p, t, t);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

double passage_time_cdf(const HawkesParams& p, double K, double t) {
    if (!(K > 0.0) || !(t > 0.0) || !(p.z0() > 0.0)) {
        throw std::invalid_argument("passage_time_cdf: requires K > 0, t > 0, z0 > 0");
    }
    const double n = p.z0();
    const double mean = n * psi(p, t);
    const double var = n * var_h(p, t);
    if (var <= 1e-30 * (1.0 + mean * mean)) {
        return K > mean ? 0.0 : 1.0;
    }
    return 1.0 - normal_cdf((K - mean) / std::sqrt(var));
}

RescaledCurves lln_rescaled_curves(const HawkesParams& p, double s, double n) {
    if (s < 0.0 || !(n >= 1.0)) {
        throw std::invalid_argument("lln_rescaled_curves: need s >= 0 and n >= 1");
    }
    const Regime r = classify_regime(p);
    const double gap = std::abs(p.drift());
    const double ns = std::pow(n, s);
    switch (r.tag) {
        case RegimeTag::SuperCritical:
            return {1.0, (1.0 - 1.0 / ns) / gap};
        case RegimeTag::SubCritical:
            return {1.0, (1.0 - 1.0 / ns) / gap};
        default:
            throw WrongRegime(
                "lln_rescaled_curves: defined for sub- and super-critical only");
    }
}

RescaledLimitLaw rescaled_limit_law(const HawkesParams& p, const Regime& regime) {
    const double a = p.alpha();
    const double b = p.beta();
    switch (regime.tag) {
        case RegimeTag::SuperCritical:
            if (!(a > b)) {
                throw WrongRegime("rescaled_limit_law: params are not super-critical");
            }
            return SuperCriticalXi{a * a / (a - b)};
        case RegimeTag::SubCritical:
            if (!(a < b)) {
                throw WrongRegime("rescaled_limit_law: params are not sub-critical");
            }
            return SubCriticalR{a * a / (b - a)};
        case RegimeTag::Critical:
            return CriticalCir{b, 0.0, p.mu(), 1.0};
        case RegimeTag::NearlyCritical: {
            // alpha_n = beta + gamma / n must match the parameters.
            const double implied = b + regime.gamma / regime.n;
            if (std::abs(a - implied) > 1e-9 * std::max(1.0, b)) {
                throw WrongRegime(
                    "rescaled_limit_law: alpha does not equal beta + gamma/n");
            }
            return CriticalCir{b, regime.gamma, p.mu(), 1.0};
        }
    }
    throw WrongRegime("rescaled_limit_law: unknown regime");
}

} // namespace hawkes
