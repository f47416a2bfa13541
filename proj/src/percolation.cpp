#include "frontier/percolation.hpp"

#include <algorithm>
#include <cmath>

#include "frontier/errors.hpp"
#include "frontier/parallel.hpp"
#include "frontier/unionfind.hpp"

namespace frontier {

namespace {

// Six axial neighbor offsets of the triangular lattice.
constexpr int kDq[6] = {1, -1, 0, 0, 1, -1};
constexpr int kDr[6] = {0, 0, 1, -1, -1, 1};

// The two common neighbors of the adjacent pair (p, p+d), as offsets from p.
// Derived from e in D with e - d in D.
void wings(int dq, int dr, int out[2][2]) {
    if (dq == 1 && dr == 0) {
        out[0][0] = 0; out[0][1] = 1; out[1][0] = 1; out[1][1] = -1;
    } else if (dq == -1 && dr == 0) {
        out[0][0] = 0; out[0][1] = -1; out[1][0] = -1; out[1][1] = 1;
    } else if (dq == 0 && dr == 1) {
        out[0][0] = 1; out[0][1] = 0; out[1][0] = -1; out[1][1] = 1;
    } else if (dq == 0 && dr == -1) {
        out[0][0] = -1; out[0][1] = 0; out[1][0] = 1; out[1][1] = -1;
    } else if (dq == 1 && dr == -1) {
        out[0][0] = 1; out[0][1] = 0; out[1][0] = 0; out[1][1] = -1;
    } else {  // (-1, 1)
        out[0][0] = -1; out[0][1] = 0; out[1][0] = 0; out[1][1] = 1;
    }
}

TriRegion make_region(int cols, int rows, double mesh, Seed seed, int change_col) {
    if (cols < 2 || rows < 1) throw ConfigError("TriRegion: region too small");
    if (!(mesh > 0.0)) throw ConfigError("TriRegion: mesh must be > 0");
    if (change_col < 1 || change_col >= cols)
        throw ConfigError("TriRegion: boundary change column outside region");
    TriRegion reg;
    reg.cols = cols;
    reg.rows = rows;
    reg.mesh = mesh;
    reg.seed = seed;
    reg.color.assign(static_cast<std::size_t>(cols) * rows, SiteColor::unset);
    for (int q = 0; q < cols; ++q)
        reg.color[reg.index(q, 0)] = q >= change_col ? SiteColor::white
                                                     : SiteColor::black;
    return reg;
}

}  // namespace

SiteColor TriRegion::probe(int q, int r) {
    if (!in_region(q, r)) throw ConfigError("TriRegion::probe: outside region");
    SiteColor& c = color[index(q, r)];
    if (c == SiteColor::unset)
        c = site_coin(seed, index(q, r)) ? SiteColor::white : SiteColor::black;
    return c;
}

TriRegion sample_region(int cols, int rows, double mesh, Seed seed, int change_col) {
    TriRegion reg = make_region(cols, rows, mesh, seed, change_col);
    for (int r = 1; r < rows; ++r)
        for (int q = 0; q < cols; ++q) reg.probe(q, r);
    return reg;
}

TriRegion lazy_region(int cols, int rows, double mesh, Seed seed, int change_col) {
    return make_region(cols, rows, mesh, seed, change_col);
}

ExplorationPath explore(TriRegion& region) {
    const int q0 = [&] {
        for (int q = 1; q < region.cols; ++q)
            if (region.color[region.index(q, 0)] == SiteColor::white &&
                region.color[region.index(q - 1, 0)] == SiteColor::black)
                return q;
        throw ConfigError("explore: no boundary change point on row 0");
    }();

    ExplorationPath path;
    // white on the left of the walk direction, black on the right
    std::pair<int, int> w{q0, 0}, b{q0 - 1, 0};
    std::pair<int, int> c{q0 - 1, 1};  // forward common neighbor, row 1
    auto center = [&](std::pair<int, int> s1, std::pair<int, int> s2,
                      std::pair<int, int> s3) {
        return (region.position(s1.first, s1.second) +
                region.position(s2.first, s2.second) +
                region.position(s3.first, s3.second)) /
               3.0;
    };
    path.vertices.push_back(0.5 * (region.position(w.first, w.second) +
                                   region.position(b.first, b.second)));

    const std::size_t budget =
        4 * static_cast<std::size_t>(region.cols) * region.rows + 16;
    std::size_t steps = 0;
    while (region.in_region(c.first, c.second)) {
        if (++steps > budget) throw NumericError("explore: walker did not terminate");
        SiteColor col = region.probe(c.first, c.second);
        path.vertices.push_back(center(w, b, c));
        std::pair<int, int> replaced;
        if (col == SiteColor::white) {
            replaced = w;
            w = c;
        } else {
            replaced = b;
            b = c;
        }
        path.flanks.emplace_back(w, b);
        int wg[2][2];
        wings(b.first - w.first, b.second - w.second, wg);
        std::pair<int, int> n1{w.first + wg[0][0], w.second + wg[0][1]};
        std::pair<int, int> n2{w.first + wg[1][0], w.second + wg[1][1]};
        c = (n1 == replaced) ? n2 : n1;
    }
    return path;
}

namespace {

struct RectLattice {
    int rows = 0;
    int qmin = 0, qspan = 0;  // global q window across all rows
    double width = 0.0;

    bool contains(int q, int r) const {
        double x = q + 0.5 * r;
        return x >= 0.0 && x <= width;
    }
    std::size_t index(int q, int r) const {
        return static_cast<std::size_t>(r) * qspan + (q - qmin);
    }
};

RectLattice rect_lattice(double aspect, int mesh_sites) {
    RectLattice lat;
    const double root3_2 = 0.8660254037844386467637231707529362;
    int rows;
    if (aspect >= 1.0)
        rows = mesh_sites;
    else
        rows = static_cast<int>(std::ceil(mesh_sites / aspect / root3_2)) + 1;
    double height = (rows - 1) * root3_2;
    lat.rows = rows;
    lat.width = aspect * height;
    lat.qmin = -(rows / 2) - 1;
    lat.qspan = static_cast<int>(std::ceil(lat.width)) + rows / 2 + 3;
    return lat;
}

bool rect_white_crossing(const RectLattice& lat, Seed seed) {
    const std::size_t n = static_cast<std::size_t>(lat.rows) * lat.qspan;
    UnionFind uf(n + 2);
    const std::int32_t kLeft = static_cast<std::int32_t>(n);
    const std::int32_t kRight = kLeft + 1;
    std::vector<std::uint8_t> white(n, 0);
    for (int r = 0; r < lat.rows; ++r) {
        for (int q = lat.qmin; q < lat.qmin + lat.qspan; ++q) {
            if (!lat.contains(q, r)) continue;
            std::size_t i = lat.index(q, r);
            if (!site_coin(seed, i)) continue;
            white[i] = 1;
            std::int32_t id = static_cast<std::int32_t>(i);
            // neighbors already colored: (-1,0), (0,-1), (+1,-1)
            const int pq[3] = {q - 1, q, q + 1};
            const int pr[3] = {r, r - 1, r - 1};
            for (int k = 0; k < 3; ++k) {
                if (pr[k] < 0 || !lat.contains(pq[k], pr[k])) continue;
                std::size_t j = lat.index(pq[k], pr[k]);
                if (white[j]) uf.unite(id, static_cast<std::int32_t>(j));
            }
            double x = q + 0.5 * r;
            if (x <= 0.75) uf.unite(kLeft, id);
            if (x >= lat.width - 0.75) uf.unite(kRight, id);
        }
    }
    return uf.same(kLeft, kRight);
}

struct RhombusOutcome {
    bool white_lr;
    bool black_tb;
};

RhombusOutcome rhombus_sample(int n, Seed seed) {
    const std::size_t cells = static_cast<std::size_t>(n) * n;
    UnionFind uf(2 * cells + 4);  // white copy then black copy
    const std::int32_t wl = static_cast<std::int32_t>(2 * cells);
    const std::int32_t wr = wl + 1, bt = wl + 2, bb = wl + 3;
    std::vector<std::uint8_t> white(cells, 0);
    for (int r = 0; r < n; ++r) {
        for (int q = 0; q < n; ++q) {
            std::size_t i = static_cast<std::size_t>(r) * n + q;
            bool is_white = site_coin(seed, i);
            white[i] = is_white;
            std::int32_t id = static_cast<std::int32_t>(is_white ? i : cells + i);
            const int pq[3] = {q - 1, q, q + 1};
            const int pr[3] = {r, r - 1, r - 1};
            for (int k = 0; k < 3; ++k) {
                if (pq[k] < 0 || pr[k] < 0 || pq[k] >= n || pr[k] >= n) continue;
                std::size_t j = static_cast<std::size_t>(pr[k]) * n + pq[k];
                if (white[j] == (is_white ? 1 : 0))
                    uf.unite(id, static_cast<std::int32_t>(is_white ? j : cells + j));
            }
            if (is_white) {
                if (q == 0) uf.unite(wl, id);
                if (q == n - 1) uf.unite(wr, id);
            } else {
                if (r == 0) uf.unite(bt, id);
                if (r == n - 1) uf.unite(bb, id);
            }
        }
    }
    return RhombusOutcome{uf.same(wl, wr), uf.same(bt, bb)};
}

}  // namespace

DualityOutcome rhombus_duality_sample(int n, Seed seed) {
    RhombusOutcome o = rhombus_sample(n, seed);
    return DualityOutcome{o.white_lr, o.black_tb};
}

CrossingEstimate crossing_probability(double aspect, int mesh_sites,
                                      std::size_t trials, Seed seed,
                                      CrossShape shape, int threads) {
    if (!(aspect > 0.0)) throw ConfigError("crossing_probability: aspect must be > 0");
    if (mesh_sites < 32)
        throw ConfigError("crossing_probability: need >= 32 sites per short side");
    if (trials < 1000)
        throw ConfigError("crossing_probability: need >= 1000 trials");
    if (shape == CrossShape::rhombus && std::fabs(aspect - 1.0) > 1e-12)
        throw ConfigError("crossing_probability: rhombus shape is aspect 1 only");

    std::vector<std::uint8_t> hit(trials, 0);
    if (shape == CrossShape::rhombus) {
        parallel_trials(trials, threads, [&](std::size_t t) {
            hit[t] = rhombus_sample(mesh_sites, seed.with_stream(t)).white_lr ? 1 : 0;
        });
    } else {
        RectLattice lat = rect_lattice(aspect, mesh_sites);
        parallel_trials(trials, threads, [&](std::size_t t) {
            hit[t] = rect_white_crossing(lat, seed.with_stream(t)) ? 1 : 0;
        });
    }
    std::size_t succ = 0;
    for (auto h : hit) succ += h;
    CrossingEstimate est;
    est.trials = trials;
    est.successes = succ;
    est.p = static_cast<double>(succ) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.p * (1.0 - est.p) / static_cast<double>(trials));
    return est;
}

}  // namespace frontier
