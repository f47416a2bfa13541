#include "frontier/grid.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "frontier/errors.hpp"

namespace frontier {

namespace {

struct Bounds {
    int minx = 0, miny = 0, maxx = -1, maxy = -1;
    void add(int x, int y) {
        if (maxx < minx) {
            minx = maxx = x;
            miny = maxy = y;
        } else {
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    }
};

// Flood the exterior of `mask` on a grid enlarged by one ring. Returns a
// byte map over the enlarged (width+2) x (height+2) window: 1 = free cell
// reachable from outside the bounding box.
std::vector<std::uint8_t> exterior_map(const GridMask& mask) {
    const int W = mask.width + 2, H = mask.height + 2;
    std::vector<std::uint8_t> ext(static_cast<std::size_t>(W) * H, 0);
    std::vector<std::int32_t> stack;
    stack.reserve(static_cast<std::size_t>(W) * 2 + H * 2);
    auto idx = [W](int x, int y) { return static_cast<std::size_t>(y) * W + x; };
    auto occupied = [&](int x, int y) {
        return mask.test(mask.x0 + x - 1, mask.y0 + y - 1);
    };
    auto push = [&](int x, int y) {
        std::size_t i = idx(x, y);
        if (!ext[i] && !occupied(x, y)) {
            ext[i] = 1;
            stack.push_back(static_cast<std::int32_t>(i));
        }
    };
    for (int x = 0; x < W; ++x) {
        push(x, 0);
        push(x, H - 1);
    }
    for (int y = 0; y < H; ++y) {
        push(0, y);
        push(W - 1, y);
    }
    while (!stack.empty()) {
        std::int32_t i = stack.back();
        stack.pop_back();
        int x = i % W, y = i / W;
        if (x > 0) push(x - 1, y);
        if (x < W - 1) push(x + 1, y);
        if (y > 0) push(x, y - 1);
        if (y < H - 1) push(x, y + 1);
    }
    return ext;
}

}  // namespace

std::size_t GridMask::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits) c += std::popcount(w);
    return c;
}

GridMask rasterize(const Path2D& path, double cell_size) {
    if (!(cell_size > 0.0)) throw ConfigError("rasterize: cell_size must be > 0");
    if (path.points.empty()) throw ConfigError("rasterize: empty path");
    Bounds b;
    const double inv = 1.0 / cell_size;
    for (const auto& z : path.points)
        b.add(cell_floor(z.real() * inv), cell_floor(z.imag() * inv));
    GridMask m = GridMask::empty_window(cell_size, b.minx - 1, b.miny - 1,
                                        b.maxx - b.minx + 3, b.maxy - b.miny + 3);
    auto z0 = path.points.front();
    double px = z0.real() * inv, py = z0.imag() * inv;
    m.set(cell_floor(px), cell_floor(py));
    for (std::size_t i = 1; i < path.points.size(); ++i) {
        double qx = path.points[i].real() * inv, qy = path.points[i].imag() * inv;
        traverse_cells(px, py, qx, qy, [&](int cx, int cy) { m.set(cx, cy); });
        px = qx;
        py = qy;
    }
    return m;
}

GridMask rasterize_walk(const LatticeWalk& walk) {
    if (walk.sites.empty()) throw ConfigError("rasterize_walk: empty walk");
    Bounds b;
    for (auto [x, y] : walk.sites) b.add(x, y);
    GridMask m = GridMask::empty_window(1.0, b.minx, b.miny, b.maxx - b.minx + 1,
                                        b.maxy - b.miny + 1);
    for (auto [x, y] : walk.sites) m.set(x, y);
    return m;
}

GridMask hull(const GridMask& mask) {
    if (mask.count() == 0) throw ConfigError("hull: empty mask");
    auto ext = exterior_map(mask);
    const int W = mask.width + 2;
    GridMask out = GridMask::empty_window(mask.cell_size, mask.x0, mask.y0,
                                          mask.width, mask.height);
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            if (!ext[static_cast<std::size_t>(y + 1) * W + (x + 1)])
                out.set(mask.x0 + x, mask.y0 + y);
    return out;
}

GridMask frontier(const GridMask& mask) {
    if (mask.count() == 0) throw ConfigError("frontier: empty mask");
    auto ext = exterior_map(mask);
    const int W = mask.width + 2, H = mask.height + 2;
    auto is_ext = [&](int x, int y) {
        if (x < 0 || y < 0 || x >= W || y >= H) return true;
        return ext[static_cast<std::size_t>(y) * W + x] != 0;
    };
    GridMask out = GridMask::empty_window(mask.cell_size, mask.x0, mask.y0,
                                          mask.width, mask.height);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            int ex = x + 1, ey = y + 1;
            if (is_ext(ex, ey)) continue;  // not part of the hull
            if (is_ext(ex - 1, ey) || is_ext(ex + 1, ey) || is_ext(ex, ey - 1) ||
                is_ext(ex, ey + 1))
                out.set(mask.x0 + x, mask.y0 + y);
        }
    }
    return out;
}

bool disconnects(const GridMask& mask, double r_inner, double r_outer) {
    if (!(r_inner > 0.0 && r_outer > r_inner))
        throw ConfigError("disconnects: need 0 < r_inner < r_outer");
    const double s = mask.cell_size;
    if (2.0 * r_inner / s < 8.0)
        throw ConfigError("disconnects: inner circle spans fewer than 8 cells");

    // Work window: every cell whose square touches the closed disk r_outer.
    const int lo = cell_floor(-r_outer / s) - 1;
    const int hi = cell_floor(r_outer / s) + 1;
    const int W = hi - lo + 1;
    auto min_dist2 = [&](int cx, int cy) {
        // squared distance from origin to the cell's square, world units
        double x0 = cx * s, x1 = x0 + s, y0 = cy * s, y1 = y0 + s;
        double dx = x0 > 0 ? x0 : (x1 < 0 ? -x1 : 0.0);
        double dy = y0 > 0 ? y0 : (y1 < 0 ? -y1 : 0.0);
        return dx * dx + dy * dy;
    };
    auto max_dist2 = [&](int cx, int cy) {
        double x0 = cx * s, x1 = x0 + s, y0 = cy * s, y1 = y0 + s;
        double dx = std::max(std::fabs(x0), std::fabs(x1));
        double dy = std::max(std::fabs(y0), std::fabs(y1));
        return dx * dx + dy * dy;
    };
    auto on_circle = [&](int cx, int cy, double r) {
        return min_dist2(cx, cy) <= r * r && r * r <= max_dist2(cx, cy);
    };

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(W) * W, 0);
    std::vector<std::int32_t> queue;
    queue.reserve(1024);
    auto idx = [&](int cx, int cy) {
        return static_cast<std::size_t>(cy - lo) * W + (cx - lo);
    };
    for (int cy = lo; cy <= hi; ++cy) {
        for (int cx = lo; cx <= hi; ++cx) {
            if (on_circle(cx, cy, r_inner) && !mask.test(cx, cy)) {
                seen[idx(cx, cy)] = 1;
                queue.push_back(static_cast<std::int32_t>(idx(cx, cy)));
            }
        }
    }
    const double rout2 = r_outer * r_outer;
    std::size_t head = 0;
    while (head < queue.size()) {
        std::int32_t i = queue[head++];
        int cx = i % W + lo, cy = i / W + lo;
        if (on_circle(cx, cy, r_outer)) return false;  // escaped
        const int nx[4] = {cx - 1, cx + 1, cx, cx};
        const int ny[4] = {cy, cy, cy - 1, cy + 1};
        for (int k = 0; k < 4; ++k) {
            if (nx[k] < lo || nx[k] > hi || ny[k] < lo || ny[k] > hi) continue;
            std::size_t j = idx(nx[k], ny[k]);
            if (seen[j] || mask.test(nx[k], ny[k])) continue;
            if (min_dist2(nx[k], ny[k]) > rout2) continue;
            seen[j] = 1;
            queue.push_back(static_cast<std::int32_t>(j));
        }
    }
    return true;
}

PowerLawFit box_dimension(std::span<const std::complex<double>> pts,
                          std::span<const double> scales) {
    if (pts.size() < 100) throw ConfigError("box_dimension: need >= 100 points");
    if (scales.size() < 3) throw ConfigError("box_dimension: need >= 3 scales");
    std::vector<double> sc(scales.begin(), scales.end());
    std::sort(sc.begin(), sc.end());
    if (!(sc.front() > 0.0)) throw ConfigError("box_dimension: scales must be > 0");
    if (sc.back() / sc.front() < 4.0)
        throw ConfigError("box_dimension: scales must span at least 2 octaves");

    std::vector<FitPoint> points;
    std::unordered_set<std::uint64_t> cells;
    cells.reserve(pts.size());
    for (std::size_t si = 0; si < sc.size(); ++si) {
        double s = sc[si];
        cells.clear();
        for (const auto& z : pts) {
            std::uint64_t cx = static_cast<std::uint32_t>(cell_floor(z.real() / s));
            std::uint64_t cy = static_cast<std::uint32_t>(cell_floor(z.imag() / s));
            cells.insert((cx << 32) | cy);
        }
        FitPoint p;
        // abscissa 1/s so that N ~ (1/s)^dim reports slope = -dim in the
        // decay convention; callers negate.
        p.scale = 1.0 / s;
        p.value = static_cast<double>(cells.size());
        p.n_samples = pts.size();
        points.push_back(p);
    }
    // Saturation guard: the two largest cell sizes sit at the end of the
    // sorted scale list.
    for (std::size_t k = points.size() - 2; k < points.size(); ++k) {
        if (points[k].value < 16.0) points[k].used = false;
    }
    return fit_power_law(std::move(points));
}

}  // namespace frontier
