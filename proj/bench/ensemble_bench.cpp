// Times the OpenMP ensemble driver against the serial reference loop on the
// same workload and checks that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "hawkes/ensemble.hpp"
#include "hawkes/params.hpp"
#include "hawkes/simulator.hpp"

namespace {

double run(bool parallel, int workers, long paths, const hawkes::HawkesParams& p,
           std::vector<double>& out) {
    const std::vector<double> times{1.0};
    out.assign(paths, 0.0);
    const auto body = [&](long i, hawkes::RngStream& rng) {
        const auto obs = hawkes::observe_direct(p, times, rng);
        out[i] = obs.z[0] + static_cast<double>(obs.n[0]);
    };
    const auto t0 = std::chrono::steady_clock::now();
    if (parallel) {
        hawkes::for_each_path(paths, 12345, workers, body);
    } else {
        hawkes::for_each_path_serial(paths, 12345, body);
    }
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const long paths = argc > 1 ? std::atol(argv[1]) : 2000;
    const double z0 = argc > 2 ? std::atof(argv[2]) : 1000.0;
    const int workers = hawkes::default_workers();
    const hawkes::HawkesParams p(0.0, 1.0, 1.0, z0);

    std::vector<double> serial_out, parallel_out;
    const double ts = run(false, 1, paths, p, serial_out);
    const double tp = run(true, workers, paths, p, parallel_out);

    bool identical = serial_out == parallel_out;
    std::printf("paths=%ld z0=%g workers=%d\n", paths, z0, workers);
    std::printf("serial:   %.3f s  (%.1f paths/s)\n", ts, paths / ts);
    std::printf("parallel: %.3f s  (%.1f paths/s, speedup %.2fx)\n", tp,
                paths / tp, ts / tp);
    std::printf("results identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
