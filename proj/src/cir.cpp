#include "hawkes/cir.hpp"

#include <cmath>
#include <stdexcept>

namespace hawkes {

CirParams::CirParams(double beta_, double gamma_, double mu_, double x0_)
    : beta(beta_), gamma(gamma_), mu(mu_), x0(x0_) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("CirParams: beta must be finite and > 0");
    }
    if (!(mu >= 0.0) || !(x0 >= 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("CirParams: need mu >= 0, x0 >= 0, finite gamma");
    }
}

double CirParams::mean(double t) const {
    // d/dt E[X] = beta mu + gamma E[X]
    return x0 * std::exp(gamma * t) + beta * mu * t * expm1_over_x(gamma * t);
}

namespace {

CirPath make_empty(const TimeGrid& grid) {
    CirPath path{grid, {}, {}};
    path.x_values.resize(grid.size());
    path.integral_x.resize(grid.size());
    return path;
}

void accumulate_trapezoid(CirPath& path) {
    path.integral_x[0] = 0.0;
    for (std::size_t i = 1; i < path.x_values.size(); ++i) {
        const double h = path.grid[i] - path.grid[i - 1];
        path.integral_x[i] = path.integral_x[i - 1] +
                             0.5 * h * (path.x_values[i] + path.x_values[i - 1]);
    }
}

} // namespace

CirPath simulate_cir_exact(const CirParams& c, const TimeGrid& grid, RngStream& rng) {
    CirPath path = make_empty(grid);
    const double sigma2 = c.beta * c.beta;
    const double dof_half = 2.0 * c.beta * c.mu / sigma2; // nu/2 = 2 mu / beta
    double x = c.x0;
    path.x_values[0] = x;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double dt = grid[i] - grid[i - 1];
        // X' = Y / (2 cc), Y ~ noncentral chi-square(nu, 2 cc x e^{gamma dt}).
        const double cc = 2.0 / (sigma2 * dt * expm1_over_x(c.gamma * dt));
        const double lambda = 2.0 * cc * x * std::exp(c.gamma * dt);
        const long k = rng.poisson(0.5 * lambda);
        const double shape = dof_half + static_cast<double>(k);
        x = (shape > 0.0) ? rng.gamma(shape) / cc : 0.0;
        path.x_values[i] = x;
    }
    accumulate_trapezoid(path);
    return path;
}

CirPath simulate_cir_exact(const CirParams& c, const TimeGrid& grid, std::uint64_t seed) {
    RngStream rng(seed, 0);
    return simulate_cir_exact(c, grid, rng);
}

CirPath simulate_cir_euler(const CirParams& c, const TimeGrid& grid, RngStream& rng) {
    CirPath path = make_empty(grid);
    double x = c.x0; // may go negative internally; clipped where used
    path.x_values[0] = std::max(x, 0.0);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double dt = grid[i] - grid[i - 1];
        const double xp = std::max(x, 0.0);
        x += (c.beta * c.mu + c.gamma * xp) * dt +
             c.beta * std::sqrt(xp * dt) * rng.normal();
        path.x_values[i] = std::max(x, 0.0);
    }
    accumulate_trapezoid(path);
    return path;
}

CirPath simulate_cir_euler(const CirParams& c, const TimeGrid& grid, std::uint64_t seed) {
    RngStream rng(seed, 0);
    return simulate_cir_euler(c, grid, rng);
}

} // namespace hawkes
