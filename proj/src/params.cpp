#include "hawkes/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hawkes/errors.hpp"

namespace hawkes {

double expm1_over_x(double x) {
    if (std::abs(x) < kSeriesSwitch) {
        // 4-term Taylor series; remainder < |x|^4/120 < 1e-26 here.
        return 1.0 + x * (1.0 / 2.0 + x * (1.0 / 6.0 + x * (1.0 / 24.0)));
    }
    return std::expm1(x) / x;
}

HawkesParams::HawkesParams(double mu, double alpha, double beta, double z0)
    : mu_(mu), alpha_(alpha), beta_(beta), z0_(z0) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("HawkesParams: alpha must be finite and > 0");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("HawkesParams: beta must be finite and > 0");
    }
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("HawkesParams: mu must be finite and >= 0");
    }
    if (!(z0 >= 0.0) || !std::isfinite(z0)) {
        throw std::invalid_argument("HawkesParams: z0 must be finite and >= 0");
    }
}

bool HawkesParams::is_critical_branch() const noexcept {
    return std::abs(alpha_ - beta_) <= kCriticalTol * std::max(alpha_, beta_);
}

std::string HawkesParams::to_json() const {
    nlohmann::json j{{"mu", mu_}, {"alpha", alpha_}, {"beta", beta_}, {"z0", z0_}};
    return j.dump();
}

HawkesParams HawkesParams::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return HawkesParams(j.at("mu").get<double>(), j.at("alpha").get<double>(),
                        j.at("beta").get<double>(), j.at("z0").get<double>());
}

Regime Regime::nearly_critical(double gamma, double n) {
    if (!(n >= 1.0)) {
        throw std::invalid_argument("Regime: nearly-critical scale index n must be >= 1");
    }
    if (!std::isfinite(gamma)) {
        throw std::invalid_argument("Regime: gamma must be finite");
    }
    return {RegimeTag::NearlyCritical, gamma, n};
}

Regime classify_regime(const HawkesParams& p) {
    if (p.is_critical_branch()) {
        return Regime::critical();
    }
    return p.alpha() > p.beta() ? Regime::super_critical() : Regime::sub_critical();
}

const char* regime_name(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::SubCritical: return "sub-critical";
        case RegimeTag::Critical: return "critical";
        case RegimeTag::SuperCritical: return "super-critical";
        case RegimeTag::NearlyCritical: return "nearly-critical";
    }
    return "unknown";
}

TimeGrid::TimeGrid(double t0, double t1, std::size_t n_points) {
    if (!(t0 >= 0.0) || !(t1 > t0) || n_points < 2) {
        throw std::invalid_argument("TimeGrid: need 0 <= t0 < t1 and >= 2 points");
    }
    points_.resize(n_points);
    const double h = (t1 - t0) / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        points_[i] = t0 + h * static_cast<double>(i);
    }
    points_.back() = t1;
}

TimeGrid::TimeGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2 || points_.front() < 0.0) {
        throw std::invalid_argument("TimeGrid: need >= 2 points starting at t >= 0");
    }
    if (!std::is_sorted(points_.begin(), points_.end(),
                        [](double a, double b) { return a <= b; })) {
        throw std::invalid_argument("TimeGrid: points must be strictly increasing");
    }
}

double mean_curve(const HawkesParams& p, double t) {
    if (p.mu() != 0.0) {
        throw UnsupportedCase("mean_curve: closed form requires mu = 0");
    }
    if (t < 0.0) {
        throw std::invalid_argument("mean_curve: t must be >= 0");
    }
    if (p.is_critical_branch()) {
        return p.z0();
    }
    return p.z0() * std::exp(p.drift() * t);
}

double psi(const HawkesParams& p, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("psi: t must be >= 0");
    }
    const double d = p.is_critical_branch() ? 0.0 : p.drift();
    return t * expm1_over_x(d * t);
}

} // namespace hawkes
