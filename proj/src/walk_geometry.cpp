#include "frontier/walk_geometry.hpp"

#include <algorithm>

#include "frontier/unionfind.hpp"

namespace frontier {

IndexSet cut_times(const LatticeWalk& walk) {
    const std::size_t n = walk.steps();
    if (n < 2) return {};

    int minx = walk.sites[0].first, maxx = minx;
    int miny = walk.sites[0].second, maxy = miny;
    for (auto [x, y] : walk.sites) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    const int W = maxx - minx + 1;
    std::vector<std::int32_t> last(static_cast<std::size_t>(W) * (maxy - miny + 1), -1);
    std::vector<std::int32_t> cover_diff(n + 2, 0);
    for (std::size_t s = 0; s <= n; ++s) {
        auto [x, y] = walk.sites[s];
        std::size_t id = static_cast<std::size_t>(y - miny) * W + (x - minx);
        if (last[id] >= 0) {
            // visits (i, s) of one site exclude all k in [i, s]
            ++cover_diff[last[id]];
            --cover_diff[s + 1];
        }
        last[id] = static_cast<std::int32_t>(s);
    }
    IndexSet cuts;
    std::int32_t cover = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        cover += cover_diff[k];
        if (k > 0 && k < n && cover == 0) cuts.push_back(k);
    }
    return cuts;
}

IndexSet pioneer_times(const LatticeWalk& walk) {
    if (walk.sites.empty()) return {};
    const std::size_t n = walk.steps();

    int minx = walk.sites[0].first, maxx = minx;
    int miny = walk.sites[0].second, maxy = miny;
    for (auto [x, y] : walk.sites) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    // Margin of 2 so the border ring is always free and connected.
    const int x0 = minx - 2, y0 = miny - 2;
    const int W = maxx - minx + 5, H = maxy - miny + 5;
    const std::size_t cells = static_cast<std::size_t>(W) * H;
    const std::int32_t kInf = static_cast<std::int32_t>(cells);

    auto cell_of = [&](std::pair<int, int> s) {
        return static_cast<std::int32_t>(
            static_cast<std::size_t>(s.second - y0) * W + (s.first - x0));
    };

    std::vector<std::uint8_t> occupied(cells, 0);
    std::vector<std::uint8_t> first_visit(n + 1, 0);
    for (std::size_t s = 0; s <= n; ++s) {
        std::int32_t c = cell_of(walk.sites[s]);
        if (!occupied[c]) {
            occupied[c] = 1;
            first_visit[s] = 1;
        }
    }

    UnionFind uf(cells + 1);
    auto link_free_neighbors = [&](std::int32_t c) {
        int x = c % W, y = c / W;
        if (x > 0 && !occupied[c - 1]) uf.unite(c, c - 1);
        if (x < W - 1 && !occupied[c + 1]) uf.unite(c, c + 1);
        if (y > 0 && !occupied[c - W]) uf.unite(c, c - W);
        if (y < H - 1 && !occupied[c + W]) uf.unite(c, c + W);
        if (x == 0 || y == 0 || x == W - 1 || y == H - 1) uf.unite(kInf, c);
    };
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(cells); ++c)
        if (!occupied[c]) link_free_neighbors(c);

    // Reverse sweep: at step s the occupied set is exactly {S_0..S_s}.
    std::vector<std::size_t> rev;
    std::int32_t inf_root = uf.find(kInf);
    for (std::size_t si = n + 1; si-- > 0;) {
        std::int32_t c = cell_of(walk.sites[si]);
        int x = c % W, y = c / W;
        bool pioneer = (x > 0 && !occupied[c - 1] && uf.find(c - 1) == inf_root) ||
                       (x < W - 1 && !occupied[c + 1] && uf.find(c + 1) == inf_root) ||
                       (y > 0 && !occupied[c - W] && uf.find(c - W) == inf_root) ||
                       (y < H - 1 && !occupied[c + W] && uf.find(c + W) == inf_root);
        if (pioneer) rev.push_back(si);
        if (first_visit[si] && si > 0) {
            occupied[c] = 0;
            link_free_neighbors(c);
            inf_root = uf.find(kInf);
        }
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

}  // namespace frontier
