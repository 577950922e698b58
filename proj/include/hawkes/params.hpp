#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hawkes {

// Relative tolerance used everywhere a formula branches on alpha == beta.
inline constexpr double kCriticalTol = 1e-12;

// Below this value of |x| = |alpha - beta| * t, expressions of the form
// (e^x - 1)/x are evaluated by Taylor series instead of expm1.
inline constexpr double kSeriesSwitch = 1e-6;

/// (e^x - 1)/x with the removable singularity at x = 0 filled in.
double expm1_over_x(double x);

/// Model parameters of the linear Markovian Hawkes process with exciting
/// function alpha * exp(-beta t) and initial excitation state z0.
class HawkesParams {
public:
    HawkesParams(double mu, double alpha, double beta, double z0);

    double mu() const noexcept { return mu_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double z0() const noexcept { return z0_; }

    /// alpha - beta, the exponent driving every mean curve.
    double drift() const noexcept { return alpha_ - beta_; }

    /// Initial intensity mu + z0.
    double initial_intensity() const noexcept { return mu_ + z0_; }

    /// True when |alpha - beta| <= kCriticalTol * max(alpha, beta).
    bool is_critical_branch() const noexcept;

    std::string to_json() const;
    static HawkesParams from_json(const std::string& text);

private:
    double mu_;
    double alpha_;
    double beta_;
    double z0_;
};

enum class RegimeTag { SubCritical, Critical, SuperCritical, NearlyCritical };

/// Regime classification; NearlyCritical additionally carries the drift
/// coefficient gamma and the scale index n of alpha_n = beta + gamma / n.
struct Regime {
    RegimeTag tag;
    double gamma = 0.0;
    double n = 1.0;

    static Regime sub_critical() { return {RegimeTag::SubCritical}; }
    static Regime critical() { return {RegimeTag::Critical}; }
    static Regime super_critical() { return {RegimeTag::SuperCritical}; }
    static Regime nearly_critical(double gamma, double n);
};

/// Classifies by the sign of alpha - beta, with the critical band given by
/// kCriticalTol. Never returns NearlyCritical; that tag is constructed
/// explicitly for scale-indexed experiments.
Regime classify_regime(const HawkesParams& p);

const char* regime_name(RegimeTag tag);

/// Strictly increasing sample times spanning [t0, t1].
class TimeGrid {
public:
    TimeGrid(double t0, double t1, std::size_t n_points);
    explicit TimeGrid(std::vector<double> points);

    double t0() const noexcept { return points_.front(); }
    double t1() const noexcept { return points_.back(); }
    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const noexcept { return points_[i]; }
    const std::vector<double>& points() const noexcept { return points_; }

private:
    std::vector<double> points_;
};

/// E[Z_t | Z_0] = z0 * exp((alpha - beta) t). Stated for mu = 0 only;
/// throws UnsupportedCase otherwise.
double mean_curve(const HawkesParams& p, double t);

/// psi(t) = (e^{(alpha-beta)t} - 1)/(alpha - beta), with value t at
/// alpha = beta; the FLLN limit of N_t / n.
double psi(const HawkesParams& p, double t);

} // namespace hawkes
