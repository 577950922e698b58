#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "hawkes/params.hpp"
#include "hawkes/rng.hpp"

namespace hawkes {

inline constexpr long kDefaultEventCap = 10'000'000;

/// One realized trajectory of (Z, N): strictly increasing event times in
/// (0, T] and the post-jump Z value at each event.
struct SimPath {
    HawkesParams params;
    double horizon;
    std::uint64_t seed;
    std::vector<double> event_times;
    std::vector<double> z_at_events;

    long n_total() const noexcept { return static_cast<long>(event_times.size()); }
};

/// Super-critical explosion guard tripped; carries the partial path.
class EventCapExceeded : public std::runtime_error {
public:
    EventCapExceeded(std::string what, SimPath partial)
        : std::runtime_error(std::move(what)), partial_(std::move(partial)) {}

    const SimPath& partial() const noexcept { return partial_; }

private:
    SimPath partial_;
};

/// Exact simulation by compensator inversion: between events the increment
/// over dt is mu dt + (Z/beta)(1 - e^{-beta dt}); each Exp(1) draw is
/// inverted in closed form (mu = 0) or by safeguarded Newton (mu > 0).
SimPath simulate_direct(const HawkesParams& p, double T, std::uint64_t seed,
                        long event_cap = kDefaultEventCap);
SimPath simulate_direct(const HawkesParams& p, double T, RngStream& rng,
                        std::uint64_t seed_label, long event_cap = kDefaultEventCap);

/// Independent construction via the immigration-birth representation:
/// ancestors arrive as an inhomogeneous Poisson process with rate
/// z0 e^{-beta t} plus a homogeneous stream at rate mu; every point spawns
/// Poisson(alpha/beta) children with Exp(beta) delays, truncated at T.
SimPath simulate_cluster(const HawkesParams& p, double T, std::uint64_t seed,
                         long event_cap = kDefaultEventCap);
SimPath simulate_cluster(const HawkesParams& p, double T, RngStream& rng,
                         std::uint64_t seed_label, long event_cap = kDefaultEventCap);

/// State of (Z, N) observed at a fixed list of query times; the streaming
/// ensemble kernel records these without materializing the path.
struct PathObservation {
    std::vector<double> z;
    std::vector<long> n;
};

/// Runs the direct simulation recording (Z, N) at the given sorted times
/// and discarding events. Consumes the stream exactly like simulate_direct.
PathObservation observe_direct(const HawkesParams& p,
                               const std::vector<double>& times, RngStream& rng,
                               long event_cap = kDefaultEventCap);

/// Path functionals with exact per-segment closed forms for the integral
/// of Z and the compensated counting residual.
class PathFunctionals {
public:
    explicit PathFunctionals(const SimPath& path);

    double n_of_t(double t) const;
    double z_of_t(double t) const;
    double integral_z(double t) const;
    /// M_t = N_t - int_0^t (mu + Z_s) ds; mean-zero under a correct model.
    double martingale_residual(double t) const;

    double horizon() const noexcept { return horizon_; }

private:
    std::size_t segment_of(double t) const;

    double mu_;
    double alpha_;
    double beta_;
    double z0_;
    double horizon_;
    std::vector<double> times_;     // event times
    std::vector<double> z_after_;   // post-jump Z
    std::vector<double> int_prefix_; // int_0^{tau_k} Z ds
};

PathFunctionals evaluate_path(const SimPath& path);

/// CSV: "# hawkes-path v1" header, params line, then event_time,z_after rows.
void write_path_csv(std::ostream& os, const SimPath& path);

} // namespace hawkes
