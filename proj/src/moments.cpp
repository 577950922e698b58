#include "hawkes/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "hawkes/errors.hpp"

namespace hawkes {

// With d = alpha - beta and phi(x) = (e^x - 1)/x, the Proposition-1 moments
// regroup into exponential-difference factors:
//   E[Z^2] = z0^2 e^{2dt} + a^2 z0 e^{dt} t phi(dt)
//   E[Z^3] = z0^3 e^{3dt} + 3 a^2 z0^2 e^{2dt} t phi(dt)
//            + a^3 z0 e^{dt} t phi(2dt) + (3/2) a^4 z0 e^{dt} t^2 phi(dt)^2
// which reduce exactly to the alpha = beta formulas as d -> 0.
MomentSet moments_of_z(const HawkesParams& p, double t) {
    if (p.mu() != 0.0) {
        throw UnsupportedCase("moments_of_z: closed form requires mu = 0");
    }
    if (t < 0.0) {
        throw std::invalid_argument("moments_of_z: t must be >= 0");
    }
    const double a = p.alpha();
    const double z0 = p.z0();
    const double d = p.is_critical_branch() ? 0.0 : p.drift();
    const double e1 = std::exp(d * t);
    const double e2 = e1 * e1;
    const double e3 = e2 * e1;
    const double tp = t * expm1_over_x(d * t);      // t phi(dt)
    const double tp2 = t * expm1_over_x(2.0 * d * t); // t phi(2dt)

    MomentSet m;
    m.t = t;
    m.ez = z0 * e1;
    m.ez2 = z0 * z0 * e2 + a * a * z0 * e1 * tp;
    m.ez3 = z0 * z0 * z0 * e3 + 3.0 * a * a * z0 * z0 * e2 * tp +
            a * a * a * z0 * e1 * tp2 + 1.5 * a * a * a * a * z0 * e1 * tp * tp;
    return m;
}

double variance_of_z(const HawkesParams& p, double t) {
    const MomentSet m = moments_of_z(p, t);
    double v = m.ez2 - m.ez * m.ez;
    if (v < 0.0) {
        // Analytically Var = a^2 z0 e^{dt} t phi(dt) >= 0; anything negative
        // is floating-point residue of the subtraction.
        if (-v <= 1e-9 * m.ez2) {
            v = 0.0;
        }
    }
    return v;
}

} // namespace hawkes
