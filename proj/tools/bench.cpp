// Benchmark comparing the serial reference path against the OpenMP-parallel
// one on the main trial kernels. Both must produce identical numbers; the
// unit tests enforce that, this tool reports the speedup.

#include <chrono>
#include <cstdio>

#include "frontier/mc.hpp"
#include "frontier/parallel.hpp"
#include "frontier/percolation.hpp"

using namespace frontier;

namespace {

template <class Fn>
double time_s(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %9.3fs %9.3fs %8.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    int workers = effective_threads(0);
    std::printf("workers available: %d\n", workers);
    std::printf("%-28s %10s %10s %9s\n", "kernel", "serial", "parallel", "speedup");

    // warm the allocator and page cache so the first timed run is not
    // penalized
    {
        ExperimentPlan warm;
        warm.radii = dyadic_radii(2, 8);
        warm.trials_per_radius = 200;
        warm.dt = 0.05;
        warm.seed = Seed{98, 0};
        estimate_nonintersection(1, 1, warm);
        estimate_disconnection(1, warm);
        dimension_counts({1 << 12, 1 << 13, 1 << 14}, 8, Seed{98, 1}, 0);
    }

    {
        ExperimentPlan plan;
        plan.radii = dyadic_radii(2, 32);
        plan.trials_per_radius = 1500;
        plan.dt = 0.05;
        plan.seed = Seed{99, 0};
        double s = time_s([&] {
            plan.threads = 1;
            estimate_nonintersection(1, 1, plan);
        });
        double p = time_s([&] {
            plan.threads = 0;
            estimate_nonintersection(1, 1, plan);
        });
        row("nonintersection xi(1,1)", s, p);
    }
    {
        ExperimentPlan plan;
        plan.radii = dyadic_radii(2, 16);
        plan.trials_per_radius = 1500;
        plan.dt = 0.05;
        plan.seed = Seed{99, 1};
        double s = time_s([&] {
            plan.threads = 1;
            estimate_disconnection(1, plan);
        });
        double p = time_s([&] {
            plan.threads = 0;
            estimate_disconnection(1, plan);
        });
        row("disconnection xi(1,0)", s, p);
    }
    {
        double s = time_s([&] {
            crossing_probability(1.0, 96, 3000, Seed{99, 2}, CrossShape::rhombus, 1);
        });
        double p = time_s([&] {
            crossing_probability(1.0, 96, 3000, Seed{99, 2}, CrossShape::rhombus, 0);
        });
        row("percolation crossing", s, p);
    }
    {
        std::vector<std::size_t> sizes{1 << 14, 1 << 15, 1 << 16};
        double s = time_s([&] { dimension_counts(sizes, 96, Seed{99, 3}, 1); });
        double p = time_s([&] { dimension_counts(sizes, 96, Seed{99, 3}, 0); });
        row("walk dimension counts", s, p);
    }
    return 0;
}
