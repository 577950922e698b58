#pragma once

#include <cstdint>
#include <vector>

#include "hawkes/params.hpp"
#include "hawkes/rng.hpp"

namespace hawkes {

/// Square-root diffusion dX = (beta mu + gamma X) dt + beta sqrt(X) dB,
/// the critical-regime limit of Z_{tn}/n.
struct CirParams {
    double beta;  // diffusion scale > 0
    double gamma; // linear drift coefficient
    double mu;    // base drift >= 0
    double x0;    // initial value, = 1 in the limit theorem

    CirParams(double beta_, double gamma_, double mu_, double x0_ = 1.0);

    /// E[X_t] from the linear drift ODE.
    double mean(double t) const;
};

struct CirPath {
    TimeGrid grid;
    std::vector<double> x_values;
    std::vector<double> integral_x; // trapezoid-accumulated int_0^t X ds
};

/// Samples X at the grid points from the exact transition law: a scaled
/// noncentral chi-square drawn as a Poisson mixture of gammas, which covers
/// the zero-degrees-of-freedom case mu = 0 (atom at zero).
CirPath simulate_cir_exact(const CirParams& c, const TimeGrid& grid, RngStream& rng);
CirPath simulate_cir_exact(const CirParams& c, const TimeGrid& grid, std::uint64_t seed);

/// Full-truncation Euler scheme: negative excursions are clipped to zero
/// inside both the drift and the diffusion coefficient.
CirPath simulate_cir_euler(const CirParams& c, const TimeGrid& grid, RngStream& rng);
CirPath simulate_cir_euler(const CirParams& c, const TimeGrid& grid, std::uint64_t seed);

} // namespace hawkes
