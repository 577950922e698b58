#pragma once

#include <optional>
#include <vector>

#include "hawkes/params.hpp"

namespace hawkes {

/// Solution of A'(t) = -beta A + e^{alpha A} - 1, A(0) = a0, sampled on a
/// grid with dense output between the solver's internal steps.
class OdeSolutionA {
public:
    double a0() const noexcept { return a0_; }
    const std::vector<double>& grid() const noexcept { return grid_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::optional<double> blew_up_at() const noexcept { return blew_up_at_; }

    /// A at an arbitrary time in [0, t1]; +inf past the blow-up time.
    double eval(double t) const;

private:
    friend OdeSolutionA solve_a(const HawkesParams&, double, const TimeGrid&);

    struct Segment {
        double t0;
        double h;
        // Hairer dense-output coefficients for the step.
        double r1, r2, r3, r4, r5;
    };

    double a0_ = 0.0;
    std::vector<double> grid_;
    std::vector<double> values_; // +inf at grid points past blow-up
    std::optional<double> blew_up_at_;
    std::vector<Segment> segments_;
};

/// Integrates the transform-exponent ODE by adaptive Dormand-Prince 5(4)
/// with dense output, relative tolerance 1e-10. Positive solutions that
/// pass A_blow = 500/alpha are recorded as blown up and truncated; blow-up
/// is data, not an error.
OdeSolutionA solve_a(const HawkesParams& p, double a0, const TimeGrid& grid);

/// The unique positive root of -beta A + e^{alpha A} - 1 = 0, which exists
/// iff alpha < beta.
double a_critical_root(double alpha, double beta);

struct ThetaCritical {
    double t;
    double value;
    /// Sub-critical only: the defining integral saturates at the fixed
    /// point A_c; value then equals A_c.
    bool saturated = false;
};

/// theta_c(t): the supremum of theta > 0 such that the solution started at
/// A(0) = theta survives to time t, computed by bisection on the level-set
/// integral of the right-hand side.
ThetaCritical theta_critical(const HawkesParams& p, double t);

/// E[e^{-theta Z_t} | Z_0 = z0] = e^{A(t, -theta) z0}, mu = 0. Requires
/// -theta < theta_c(t) on the exponential-moment side (theta < 0).
double mgf(const HawkesParams& p, double t, double theta);

/// First- and second-order coefficients of the small-initial-value
/// expansion of A: f1(t) = e^{(alpha-beta)t} and f2 with 2 f2(t) equal to
/// the limiting variance of the Z-fluctuation at time t.
struct ExpansionF {
    double f1;
    double f2;
};

ExpansionF expansion_f(const HawkesParams& p, double t);

} // namespace hawkes
