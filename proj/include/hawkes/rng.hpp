#pragma once

#include <cmath>
#include <cstdint>

namespace hawkes {

// Counter-based stream: state advances by a fixed odd increment and every
// output is a bijective mix of the counter (splitmix64). Streams for
// different path indices are decorrelated by hashing (master_seed, index)
// into the starting counter, so an ensemble is identical no matter how the
// paths are distributed over workers.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t path_index)
        : state_(mix(master_seed + 0x9e3779b97f4a7c15ULL * (path_index + 1)) ^
                 mix(path_index + 0x632be59bd9b4e019ULL)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform on (0, 1), never returning exactly 0 or 1.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Exp(1).
    double exponential() { return -std::log(uniform()); }

    /// Standard normal via Box-Muller; draws two uniforms per call so the
    /// stream position stays a pure function of the call count.
    double normal() {
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double t = 6.283185307179586476925286766559 * uniform();
        return r * std::cos(t);
    }

    /// Poisson(mean), exact for all mean >= 0.
    long poisson(double mean);

    /// Gamma(shape, 1), exact; shape = 0 returns 0.
    double gamma(double shape);

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

inline long RngStream::poisson(double mean) {
    if (mean <= 0.0) {
        return 0;
    }
    if (mean < 30.0) {
        // Inversion by sequential search on the cdf.
        const double l = std::exp(-mean);
        long k = 0;
        double p = uniform();
        while (p > l) {
            p *= uniform();
            ++k;
        }
        return k;
    }
    // Hormann's PTRS transformed rejection, exact for mean >= ~10.
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
        const double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<long>(k);
        }
        if (k < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mean - mean - std::lgamma(k + 1.0)) {
            return static_cast<long>(k);
        }
    }
}

inline double RngStream::gamma(double shape) {
    if (shape <= 0.0) {
        return 0.0;
    }
    if (shape < 1.0) {
        // Boost to shape + 1 and scale back by U^(1/shape).
        const double g = gamma(shape + 1.0);
        return g * std::pow(uniform(), 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

} // namespace hawkes
