#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hawkes/rng.hpp"

namespace hawkes {

/// Runs fn(path_index, stream) for path_index in [0, n_paths), distributing
/// paths over an OpenMP worker pool. Each path gets its own counter-based
/// stream derived from (master_seed, path_index), so results are identical
/// for any worker count; fn must write only to slots indexed by path_index.
void for_each_path(long n_paths, std::uint64_t master_seed, int workers,
                   const std::function<void(long, RngStream&)>& fn);

/// Serial reference loop with the same seeding contract; the benchmark and
/// the determinism tests compare against it.
void for_each_path_serial(long n_paths, std::uint64_t master_seed,
                          const std::function<void(long, RngStream&)>& fn);

int default_workers();

} // namespace hawkes
