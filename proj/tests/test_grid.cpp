#include <complex>
#include <vector>

#include "doctest.h"
#include "frontier/errors.hpp"
#include "frontier/grid.hpp"
#include "frontier/paths.hpp"
#include "frontier/rng.hpp"
#include "frontier/unionfind.hpp"

using namespace frontier;

namespace {

// O(cells^2)-style oracle: a cell belongs to the hull iff it is occupied or
// cannot reach the window border through free cells (checked independently
// per cell with its own flood fill).
bool oracle_enclosed(const GridMask& m, int cx, int cy) {
    if (m.test(cx, cy)) return true;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(m.width + 2) *
                                       (m.height + 2),
                                   0);
    std::vector<std::pair<int, int>> stack{{cx, cy}};
    auto mark = [&](int x, int y) {
        std::size_t i = static_cast<std::size_t>(y - m.y0 + 1) * (m.width + 2) +
                        (x - m.x0 + 1);
        if (seen[i]) return false;
        seen[i] = 1;
        return true;
    };
    mark(cx, cy);
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (x < m.x0 || y < m.y0 || x >= m.x0 + m.width || y >= m.y0 + m.height)
            return false;  // reached outside: not enclosed
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            int nx = x + dx, ny = y + dy;
            if (m.test(nx, ny)) continue;
            if (mark(nx, ny)) stack.emplace_back(nx, ny);
        }
    }
    return true;
}

}  // namespace

TEST_CASE("rasterize basics") {
    Path2D seg;
    seg.points = {{0.5, 0.5}, {10.5, 0.5}};
    seg.times = {0.0, 1.0};
    GridMask m = rasterize(seg, 1.0);
    CHECK(m.count() == 11);
    for (int x = 0; x <= 10; ++x) CHECK(m.test(x, 0));

    Path2D pt;
    pt.points = {{3.2, -4.7}};
    pt.times = {0.0};
    CHECK(rasterize(pt, 0.5).count() == 1);

    Path2D rnd = sample_brownian_increments(1000, 0.01, Seed{101, 5});
    GridMask rm = rasterize(rnd, 0.05);
    for (const auto& z : rnd.points)
        CHECK(rm.test(cell_floor(z.real() / 0.05), cell_floor(z.imag() / 0.05)));
}

TEST_CASE("hull fills holes and is idempotent") {
    // Closed square loop of cells.
    Path2D loop;
    for (auto p : std::vector<std::complex<double>>{
             {0.5, 0.5}, {6.5, 0.5}, {6.5, 6.5}, {0.5, 6.5}, {0.5, 0.5}})
        loop.points.push_back(p);
    loop.times = {0, 1, 2, 3, 4};
    GridMask lm = rasterize(loop, 1.0);
    GridMask h = hull(lm);
    CHECK(h.count() == 49);  // 7x7 filled block

    Path2D seg;
    seg.points = {{0.1, 0.1}, {5.9, 0.1}};
    seg.times = {0, 1};
    GridMask sm = rasterize(seg, 1.0);
    GridMask sh = hull(sm);
    CHECK(sh.count() == sm.count());

    GridMask hh = hull(h);
    CHECK(hh.bits == h.bits);

    // hull >= mask cellwise
    for (int y = lm.y0; y < lm.y0 + lm.height; ++y)
        for (int x = lm.x0; x < lm.x0 + lm.width; ++x)
            if (lm.test(x, y)) CHECK(h.test(x, y));
}

TEST_CASE("hull matches per-cell reachability oracle on crops") {
    for (std::uint64_t trial = 0; trial < 4; ++trial) {
        LatticeWalk w = sample_srw(3000, Seed{202, trial});
        GridMask m = rasterize_walk(w);
        // Crop to a 64x64 window around the start to keep the oracle cheap.
        GridMask crop = GridMask::empty_window(1.0, -32, -32, 64, 64);
        for (int y = -32; y < 32; ++y)
            for (int x = -32; x < 32; ++x)
                if (m.test(x, y)) crop.set(x, y);
        if (crop.count() == 0) continue;
        GridMask h = hull(crop);
        for (int y = -32; y < 32; ++y)
            for (int x = -32; x < 32; ++x)
                CHECK(h.test(x, y) == oracle_enclosed(crop, x, y));
    }
}

TEST_CASE("frontier of simple shapes") {
    GridMask sq = GridMask::empty_window(1.0, 0, 0, 10, 10);
    for (int y = 0; y < 10; ++y)
        for (int x = 0; x < 10; ++x) sq.set(x, y);
    GridMask f = frontier::frontier(sq);
    CHECK(f.count() == 36);

    GridMask one = GridMask::empty_window(1.0, 5, 5, 1, 1);
    one.set(5, 5);
    CHECK(frontier::frontier(one).count() == 1);

    LatticeWalk w = sample_srw(2000, Seed{203, 1});
    GridMask m = rasterize_walk(w);
    GridMask h = hull(m);
    GridMask fr = frontier::frontier(m);
    for (int y = m.y0; y < m.y0 + m.height; ++y)
        for (int x = m.x0; x < m.x0 + m.width; ++x)
            if (fr.test(x, y)) {
                CHECK(h.test(x, y));
                CHECK(m.test(x, y));  // frontier cells are occupied path cells
            }
}

TEST_CASE("disconnects") {
    // Radial segment leaves an angular gap.
    Path2D ray;
    ray.points = {{1.0, 0.0}, {4.0, 0.0}};
    ray.times = {0, 1};
    GridMask rm = rasterize(ray, 0.1);
    CHECK_FALSE(disconnects(rm, 1.0, 4.0));

    // Full annular ring blocks everything.
    Path2D ring;
    for (int i = 0; i <= 720; ++i) {
        double a = i * M_PI / 360.0;
        ring.points.push_back(std::polar(2.0 + 0.2 * (i % 2), a));
        ring.times.push_back(i);
    }
    GridMask gm = rasterize(ring, 0.1);
    CHECK(disconnects(gm, 1.0, 4.0));

    CHECK_THROWS_AS(disconnects(rm, 0.2, 4.0), ConfigError);
}

TEST_CASE("disconnects equals union-find oracle on random unions") {
    for (std::uint64_t trial = 0; trial < 6; ++trial) {
        Path2D p1 = sample_to_radius(4.0, 0.02, Seed{204, 2 * trial});
        Path2D p2 = sample_to_radius(4.0, 0.02, Seed{204, 2 * trial + 1});
        double cell = 0.08;
        GridMask m = rasterize(p1, cell);
        GridMask m2 = rasterize(p2, cell);
        // union into a common window
        int x0 = std::min(m.x0, m2.x0), y0 = std::min(m.y0, m2.y0);
        int x1 = std::max(m.x0 + m.width, m2.x0 + m2.width);
        int y1 = std::max(m.y0 + m.height, m2.y0 + m2.height);
        GridMask u = GridMask::empty_window(cell, x0, y0, x1 - x0, y1 - y0);
        for (int y = y0; y < y1; ++y)
            for (int x = x0; x < x1; ++x)
                if (m.test(x, y) || m2.test(x, y)) u.set(x, y);

        // Oracle: union-find over all free cells of the disk.
        const int lo = cell_floor(-4.0 / cell) - 1, hi = cell_floor(4.0 / cell) + 1;
        const int W = hi - lo + 1;
        UnionFind uf(static_cast<std::size_t>(W) * W);
        auto id = [&](int cx, int cy) {
            return static_cast<std::int32_t>((cy - lo) * W + (cx - lo));
        };
        auto sq_min = [&](int cx, int cy) {
            double ax = cx * cell, bx = ax + cell, ay = cy * cell, by = ay + cell;
            double dx = ax > 0 ? ax : (bx < 0 ? -bx : 0.0);
            double dy = ay > 0 ? ay : (by < 0 ? -by : 0.0);
            return dx * dx + dy * dy;
        };
        auto sq_max = [&](int cx, int cy) {
            double ax = cx * cell, bx = ax + cell, ay = cy * cell, by = ay + cell;
            double dx = std::max(std::fabs(ax), std::fabs(bx));
            double dy = std::max(std::fabs(ay), std::fabs(by));
            return dx * dx + dy * dy;
        };
        auto in_disk = [&](int cx, int cy) { return sq_min(cx, cy) <= 16.0; };
        auto free_cell = [&](int cx, int cy) {
            return in_disk(cx, cy) && !u.test(cx, cy);
        };
        for (int cy = lo; cy <= hi; ++cy)
            for (int cx = lo; cx <= hi; ++cx) {
                if (!free_cell(cx, cy)) continue;
                if (cx > lo && free_cell(cx - 1, cy)) uf.unite(id(cx, cy), id(cx - 1, cy));
                if (cy > lo && free_cell(cx, cy - 1)) uf.unite(id(cx, cy), id(cx, cy - 1));
            }
        bool connected = false;
        std::vector<std::int32_t> inner, outer;
        for (int cy = lo; cy <= hi && !connected; ++cy)
            for (int cx = lo; cx <= hi; ++cx) {
                if (!free_cell(cx, cy)) continue;
                bool on_in = sq_min(cx, cy) <= 1.0 && 1.0 <= sq_max(cx, cy);
                bool on_out = sq_min(cx, cy) <= 16.0 && 16.0 <= sq_max(cx, cy);
                if (on_in) inner.push_back(id(cx, cy));
                if (on_out) outer.push_back(id(cx, cy));
            }
        for (auto a : inner) {
            for (auto b : outer)
                if (uf.same(a, b)) {
                    connected = true;
                    break;
                }
            if (connected) break;
        }
        CHECK(disconnects(u, 1.0, 4.0) == !connected);
    }
}

TEST_CASE("disconnects monotone under adding cells") {
    CounterRng rng(Seed{205, 0});
    for (int trial = 0; trial < 5; ++trial) {
        Path2D p = sample_to_radius(3.0, 0.05, Seed{206, static_cast<std::uint64_t>(trial)});
        GridMask small = rasterize(p, 0.1);
        GridMask big = GridMask::empty_window(0.1, small.x0 - 2, small.y0 - 2,
                                              small.width + 4, small.height + 4);
        for (int y = small.y0; y < small.y0 + small.height; ++y)
            for (int x = small.x0; x < small.x0 + small.width; ++x)
                if (small.test(x, y)) big.set(x, y);
        for (int k = 0; k < 200; ++k) {
            int x = big.x0 + static_cast<int>(rng.next_u64() % big.width);
            int y = big.y0 + static_cast<int>(rng.next_u64() % big.height);
            big.set(x, y);
        }
        bool d_small = disconnects(small, 1.0, 3.0);
        bool d_big = disconnects(big, 1.0, 3.0);
        if (d_small) CHECK(d_big);  // adding cells cannot reconnect
    }
}

TEST_CASE("box dimension of line and square") {
    CounterRng rng(Seed{207, 0});
    std::vector<std::complex<double>> line, square;
    for (int i = 0; i < 10000; ++i) {
        line.emplace_back(rng.uniform01() * 100.0, 0.37);
        square.emplace_back(rng.uniform01() * 100.0, rng.uniform01() * 100.0);
    }
    // Scales sit between point spacing (saturation below) and set diameter.
    PowerLawFit lf = box_dimension(line, std::vector<double>{0.5, 1.0, 2.0, 4.0});
    CHECK(-lf.slope == doctest::Approx(1.0).epsilon(0.05));
    PowerLawFit sf = box_dimension(square, std::vector<double>{2.0, 4.0, 8.0, 16.0});
    CHECK(-sf.slope == doctest::Approx(2.0).epsilon(0.05));
    CHECK_THROWS_AS(box_dimension(line, std::vector<double>{1.0, 1.1, 1.2}),
                    ConfigError);
}
