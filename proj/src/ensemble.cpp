#include "hawkes/ensemble.hpp"

#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hawkes {

void for_each_path_serial(long n_paths, std::uint64_t master_seed,
                          const std::function<void(long, RngStream&)>& fn) {
    for (long i = 0; i < n_paths; ++i) {
        RngStream rng(master_seed, static_cast<std::uint64_t>(i));
        fn(i, rng);
    }
}

void for_each_path(long n_paths, std::uint64_t master_seed, int workers,
                   const std::function<void(long, RngStream&)>& fn) {
    if (workers <= 1) {
        for_each_path_serial(n_paths, master_seed, fn);
        return;
    }
#ifdef _OPENMP
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long i = 0; i < n_paths; ++i) {
        try {
            RngStream rng(master_seed, static_cast<std::uint64_t>(i));
            fn(i, rng);
        } catch (...) {
#pragma omp critical
            {
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
#else
    for_each_path_serial(n_paths, master_seed, fn);
#endif
}

int default_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace hawkes
