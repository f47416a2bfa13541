#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "frontier/rng.hpp"

namespace frontier {

// Critical site percolation on the triangular lattice in axial coordinates:
// site (q, r) sits at (q + r/2, r*sqrt(3)/2) * mesh and its six neighbors
// are (+-1,0), (0,+-1), (+1,-1), (-1,+1). Each site is a hexagon of the
// dual mesh.
enum class SiteColor : std::uint8_t { unset = 0, white = 1, black = 2 };

struct TriRegion {
    int cols = 0;  // q in [0, cols)
    int rows = 0;  // r in [0, rows)
    double mesh = 1.0;
    Seed seed;
    std::vector<SiteColor> color;  // row-major, unset until sampled/probed

    bool in_region(int q, int r) const {
        return q >= 0 && r >= 0 && q < cols && r < rows;
    }
    std::size_t index(int q, int r) const {
        return static_cast<std::size_t>(r) * cols + q;
    }
    std::complex<double> position(int q, int r) const {
        return {mesh * (q + 0.5 * r), mesh * 0.8660254037844386467637231707529362 * r};
    }

    // Color of one site as a pure function of (seed, site); probing colors
    // the site on demand, so pre-sampled and on-the-fly exploration agree on
    // matched seeds. Boundary-condition sites set beforehand are returned
    // as stored.
    SiteColor probe(int q, int r);
};

// Fully colored parallelogram region with the two-arc chordal boundary
// condition on row 0: white for q >= change_col, black below.
TriRegion sample_region(int cols, int rows, double mesh, Seed seed,
                        int change_col);

// Same region, boundary row pinned but interior left unset (colored on
// demand by explore()).
TriRegion lazy_region(int cols, int rows, double mesh, Seed seed, int change_col);

// The percolation interface with white on its left and black on its right,
// walked from the boundary change point on row 0 until it exits the region.
// Vertices are hexagon corners (triangle centers of the site lattice).
struct ExplorationPath {
    std::vector<std::complex<double>> vertices;
    // The site pair flanking each step, for the interface invariants.
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> flanks;
};
ExplorationPath explore(TriRegion& region);

// Crossing experiments. Shape "rhombus" is the exactly self-dual
// parallelogram (aspect forced to 1); "rect" is a staircase Euclidean
// rectangle of the given aspect = width/height, crossing between the two
// vertical (short-separation when aspect < 1) edges.
enum class CrossShape { rhombus, rect };

struct CrossingEstimate {
    double p = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
    std::size_t successes = 0;
};

CrossingEstimate crossing_probability(double aspect, int mesh_sites,
                                      std::size_t trials, Seed seed,
                                      CrossShape shape = CrossShape::rect,
                                      int threads = 0);

// One sampled rhombus configuration: exactly one of {white left-right
// crossing, black top-bottom crossing} holds. Exposed for the per-sample
// duality test.
struct DualityOutcome {
    bool white_lr = false;
    bool black_tb = false;
};
DualityOutcome rhombus_duality_sample(int n, Seed seed);

}  // namespace frontier
