#pragma once

#include "hawkes/params.hpp"

namespace hawkes {

/// Conditional moments of Z_t given Z_0 = z0, mu = 0.
struct MomentSet {
    double t;
    double ez;
    double ez2;
    double ez3;
};

/// First three conditional moments of Z_t. Both the critical and the
/// non-critical branch are evaluated through (e^x - 1)/x factorizations, so
/// the value is continuous across alpha = beta with no cancellation.
MomentSet moments_of_z(const HawkesParams& p, double t);

/// Var(Z_t) = E[Z_t^2] - E[Z_t]^2, clamped at zero against floating-point
/// residue (the analytic value is always >= 0).
double variance_of_z(const HawkesParams& p, double t);

} // namespace hawkes
