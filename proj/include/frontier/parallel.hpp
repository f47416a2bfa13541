#pragma once

#include <cstddef>
#include <span>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frontier {

// Resolve a requested thread count: 0 means "all hardware threads",
// anything else is taken literally. Without OpenMP this is always 1.
inline int effective_threads(int requested) {
#ifdef _OPENMP
    if (requested <= 0) return omp_get_max_threads();
    return requested;
#else
    (void)requested;
    return 1;
#endif
}

inline int worker_index() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

// Run body(i) for i in [0, n). body must only write to its own slot i, so
// results are identical whether this runs serially or OpenMP-parallel.
// threads == 1 is the serial reference path used by the determinism tests
// and the benchmark.
template <class Fn>
void parallel_trials(std::size_t n, int threads, Fn&& body) {
    int t = effective_threads(threads);
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

// Fixed-order pairwise summation. Used for all floating-point aggregation of
// per-trial values so that results do not depend on thread scheduling.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace frontier
