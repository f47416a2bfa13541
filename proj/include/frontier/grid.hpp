#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "frontier/fit.hpp"
#include "frontier/paths.hpp"

namespace frontier {

// Rasterized occupied-cell set. Cell (cx, cy) covers the square
// [cx*cell_size, (cx+1)*cell_size) x [cy*cell_size, ...). The window
// (x0, y0, width, height) tightly contains all set cells; queries outside
// the window return false.
struct GridMask {
    double cell_size = 1.0;
    int x0 = 0, y0 = 0;
    int width = 0, height = 0;
    std::vector<std::uint64_t> bits;

    static GridMask empty_window(double cell, int x0, int y0, int w, int h) {
        GridMask m;
        m.cell_size = cell;
        m.x0 = x0;
        m.y0 = y0;
        m.width = w;
        m.height = h;
        m.bits.assign((static_cast<std::size_t>(w) * h + 63) / 64, 0);
        return m;
    }

    bool in_window(int cx, int cy) const {
        return cx >= x0 && cy >= y0 && cx < x0 + width && cy < y0 + height;
    }
    bool test(int cx, int cy) const {
        if (!in_window(cx, cy)) return false;
        std::size_t i = static_cast<std::size_t>(cy - y0) * width + (cx - x0);
        return (bits[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int cx, int cy) {
        std::size_t i = static_cast<std::size_t>(cy - y0) * width + (cx - x0);
        bits[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    std::size_t count() const;
};

inline int cell_floor(double v) { return static_cast<int>(std::floor(v)); }

// Visit every cell crossed by the segment (ax,ay)-(bx,by), coordinates in
// cell units. Amanatides-Woo traversal with a step guard against float
// stalls.
template <class Visit>
inline void traverse_cells(double ax, double ay, double bx, double by, Visit&& visit) {
    int x = cell_floor(ax), y = cell_floor(ay);
    const int xe = cell_floor(bx), ye = cell_floor(by);
    visit(x, y);
    double dx = bx - ax, dy = by - ay;
    const int stepx = dx > 0 ? 1 : -1;
    const int stepy = dy > 0 ? 1 : -1;
    constexpr double inf = std::numeric_limits<double>::infinity();
    double tMaxX = inf, tMaxY = inf, tDeltaX = inf, tDeltaY = inf;
    if (dx != 0.0) {
        tMaxX = ((x + (dx > 0 ? 1 : 0)) - ax) / dx;
        tDeltaX = stepx / dx;
    }
    if (dy != 0.0) {
        tMaxY = ((y + (dy > 0 ? 1 : 0)) - ay) / dy;
        tDeltaY = stepy / dy;
    }
    int guard = std::abs(xe - x) + std::abs(ye - y) + 4;
    while ((x != xe || y != ye) && guard-- > 0) {
        if (tMaxX < tMaxY) {
            x += stepx;
            tMaxX += tDeltaX;
        } else {
            y += stepy;
            tMaxY += tDeltaY;
        }
        visit(x, y);
    }
    if (guard <= 0) visit(xe, ye);
}

// Supercover rasterization of a sampled path.
GridMask rasterize(const Path2D& path, double cell_size);

// Lattice walk as a unit-cell mask (one cell per visited site).
GridMask rasterize_walk(const LatticeWalk& walk);

// Mask union with all components of the complement not reachable from
// outside the bounding box ("holes filled in").
GridMask hull(const GridMask& mask);

// Cells of hull(mask) 4-adjacent to the unbounded free component.
GridMask frontier(const GridMask& mask);

// True iff no 4-connected path of free cells joins the discretized circle
// |z| = r_inner to |z| = r_outer. Throws ConfigError when either circle
// spans fewer than 8 cells at the mask resolution.
bool disconnects(const GridMask& mask, double r_inner, double r_outer);

// Box-counting dimension estimate of a planar point set. The two coarsest
// scales are dropped from the fit when their box count is below 16.
PowerLawFit box_dimension(std::span<const std::complex<double>> pts,
                          std::span<const double> scales);

}  // namespace frontier
