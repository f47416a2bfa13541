#include "frontier/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "frontier/errors.hpp"
#include "frontier/special.hpp"

namespace frontier {

double annulus_L(double r) {
    if (!(r > 0.0 && r < 1.0)) throw ConfigError("annulus_L: r must be in (0,1)");
    return 0.5 * std::log(1.0 / r);
}

double rectangle_L(double width, double height) {
    if (!(width > 0.0 && height > 0.0))
        throw ConfigError("rectangle_L: dimensions must be > 0");
    return M_PI * width / height;
}

namespace {

// Red-black SOR on the free-cell Laplacian with Dirichlet pins. Returns the
// Dirichlet energy of the solution, or -1 when side_b is unreachable from
// side_a. Each half-sweep only reads the opposite parity, so the row loop is
// order-independent and OpenMP-safe with bitwise-identical results.
double solve_energy(const Quadrilateral& q, double tol) {
    const GridMask& bl = q.blocked;
    const int W = bl.width, H = bl.height;
    const std::size_t cells = static_cast<std::size_t>(W) * H;
    auto inside = [&](int x, int y) {
        return x >= 0 && y >= 0 && x < W && y < H &&
               !bl.test(bl.x0 + x, bl.y0 + y);
    };

    // 0 = blocked/outside, 1 = free, 2 = pinned 0 (side_a), 3 = pinned 1.
    std::vector<std::uint8_t> kind(cells, 0);
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x)
            if (inside(x, y)) kind[static_cast<std::size_t>(y) * W + x] = 1;
    auto stamp = [&](const std::vector<std::pair<int, int>>& side, std::uint8_t k) {
        if (side.empty()) throw ConfigError("modulus_numeric: empty side");
        for (auto [cx, cy] : side) {
            int x = cx - bl.x0, y = cy - bl.y0;
            if (!inside(x, y))
                throw ConfigError("modulus_numeric: side cell outside the domain");
            std::size_t i = static_cast<std::size_t>(y) * W + x;
            if (kind[i] >= 2) throw ConfigError("modulus_numeric: sides overlap");
            kind[i] = k;
        }
    };
    stamp(q.side_a, 2);
    stamp(q.side_b, 3);

    // Reachability from side_a; components not touching side_a carry no
    // current and are dropped.
    std::vector<std::uint8_t> reach(cells, 0);
    std::vector<std::int32_t> stack;
    for (auto [cx, cy] : q.side_a) {
        std::size_t i = static_cast<std::size_t>(cy - bl.y0) * W + (cx - bl.x0);
        reach[i] = 1;
        stack.push_back(static_cast<std::int32_t>(i));
    }
    bool hit_b = false;
    while (!stack.empty()) {
        std::int32_t i = stack.back();
        stack.pop_back();
        if (kind[i] == 3) {
            hit_b = true;
            continue;  // current stops at the far electrode
        }
        int x = i % W, y = i / W;
        const std::int32_t nb[4] = {i - 1, i + 1, i - W, i + W};
        const bool ok[4] = {x > 0, x < W - 1, y > 0, y < H - 1};
        for (int k = 0; k < 4; ++k) {
            if (!ok[k]) continue;
            std::int32_t j = nb[k];
            if (kind[j] == 0 || reach[j]) continue;
            reach[j] = 1;
            stack.push_back(j);
        }
    }
    if (!hit_b) return -1.0;

    std::vector<double> u(cells, 0.0);
    std::vector<std::uint8_t> active(cells, 0);
    for (std::size_t i = 0; i < cells; ++i) {
        if (!reach[i]) continue;
        if (kind[i] == 3) u[i] = 1.0;
        if (kind[i] == 1) active[i] = 1;
    }

    const int span = std::max(W, H);
    // Mixed Neumann/Dirichlet boundaries roughly double the effective
    // diameter the over-relaxation must cover.
    const double omega = 2.0 / (1.0 + std::sin(M_PI / (2.0 * span)));
    const long max_sweeps = 60L * span + 4000;

    auto relax_row = [&](int y, int parity) {
        const std::size_t row = static_cast<std::size_t>(y) * W;
        for (int x = (y + parity) & 1; x < W; x += 2) {
            std::size_t i = row + x;
            if (!active[i]) continue;
            double s = 0.0;
            int deg = 0;
            if (x > 0 && reach[i - 1]) {
                s += u[i - 1];
                ++deg;
            }
            if (x < W - 1 && reach[i + 1]) {
                s += u[i + 1];
                ++deg;
            }
            if (y > 0 && reach[i - W]) {
                s += u[i - W];
                ++deg;
            }
            if (y < H - 1 && reach[i + W]) {
                s += u[i + W];
                ++deg;
            }
            u[i] += omega * (s / deg - u[i]);
        }
    };

    double res = 1.0;
    for (long sweep = 0; sweep < max_sweeps && res > tol; ++sweep) {
        for (int parity = 0; parity < 2; ++parity) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (cells > 300000)
#endif
            for (int y = 0; y < H; ++y) relax_row(y, parity);
        }
        if ((sweep & 31) == 31 || sweep == max_sweeps - 1) {
            res = 0.0;
            for (std::size_t i = 0; i < cells; ++i) {
                if (!active[i]) continue;
                int x = static_cast<int>(i % static_cast<std::size_t>(W));
                int y = static_cast<int>(i / static_cast<std::size_t>(W));
                double s = 0.0;
                int deg = 0;
                if (x > 0 && reach[i - 1]) {
                    s += u[i - 1];
                    ++deg;
                }
                if (x < W - 1 && reach[i + 1]) {
                    s += u[i + 1];
                    ++deg;
                }
                if (y > 0 && reach[i - W]) {
                    s += u[i - W];
                    ++deg;
                }
                if (y < H - 1 && reach[i + W]) {
                    s += u[i + W];
                    ++deg;
                }
                res = std::max(res, std::fabs(s - deg * u[i]));
            }
        }
    }
    if (res > tol)
        throw NumericError("modulus_numeric: SOR failed to reach residual target");

    // Dirichlet energy over all adjacent reachable pairs (right/down once each).
    double energy = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
        if (!reach[i]) continue;
        int x = static_cast<int>(i % static_cast<std::size_t>(W));
        int y = static_cast<int>(i / static_cast<std::size_t>(W));
        if (x < W - 1 && reach[i + 1]) {
            double d = u[i] - u[i + 1];
            energy += d * d;
        }
        if (y < H - 1 && reach[i + W]) {
            double d = u[i] - u[i + W];
            energy += d * d;
        }
    }
    return energy;
}

}  // namespace

ExtremalLength modulus_numeric(const Quadrilateral& q, double tol) {
    double e = solve_energy(q, tol);
    if (e < 0.0) return ExtremalLength::infinite();
    if (e == 0.0) return ExtremalLength::infinite();
    return ExtremalLength{true, M_PI / e};
}

Quadrilateral annulus_quadrilateral(double r, int cells_per_unit) {
    if (!(r > 0.0 && r < 1.0))
        throw ConfigError("annulus_quadrilateral: r must be in (0,1)");
    if (cells_per_unit < 16)
        throw ConfigError("annulus_quadrilateral: resolution too coarse");
    const double cell = 1.0 / cells_per_unit;
    const int n = cells_per_unit + 2;
    Quadrilateral q;
    q.blocked = GridMask::empty_window(cell, -n, -n, 2 * n, 2 * n);
    for (int cy = -n; cy < n; ++cy) {
        for (int cx = -n; cx < n; ++cx) {
            double mx = (cx + 0.5) * cell, my = (cy + 0.5) * cell;
            double rho = std::hypot(mx, my);
            if (rho <= r || rho >= 1.0) {
                q.blocked.set(cx, cy);
            } else if (rho <= r + cell) {
                q.side_a.emplace_back(cx, cy);
            } else if (rho >= 1.0 - cell) {
                q.side_b.emplace_back(cx, cy);
            }
        }
    }
    return q;
}

double L_of_x(double x) {
    if (!(x > 0.0 && x < 1.0)) throw ConfigError("L_of_x: x must be in (0,1)");
    return M_PI * elliptic_K(std::sqrt(x)) / elliptic_K(std::sqrt(1.0 - x));
}

double L_of_x_numeric(double x, double cell) {
    if (!(x > 0.0 && x < 1.0)) throw ConfigError("L_of_x_numeric: x in (0,1)");
    if (!(cell > 0.0)) throw ConfigError("L_of_x_numeric: cell must be > 0");
    if (x < 3.0 * cell || 1.0 - x < 3.0 * cell)
        throw ConfigError("L_of_x_numeric: x too close to 0 or 1 for this grid");
    // Half-disk of radius 20 (20x the span of the marked segment [0,1]),
    // centered at 1/2, Neumann on the far arc.
    const double R = 20.0;
    const int x_lo = cell_floor((0.5 - R) / cell) - 1;
    const int x_hi = cell_floor((0.5 + R) / cell) + 1;
    const int y_hi = cell_floor(R / cell) + 1;
    Quadrilateral q;
    q.blocked = GridMask::empty_window(cell, x_lo, 0, x_hi - x_lo + 1, y_hi + 1);
    for (int cy = 0; cy <= y_hi; ++cy) {
        for (int cx = x_lo; cx <= x_hi; ++cx) {
            double mx = (cx + 0.5) * cell, my = (cy + 0.5) * cell;
            if (std::hypot(mx - 0.5, my) >= R) q.blocked.set(cx, cy);
        }
    }
    for (int cx = x_lo; cx <= x_hi; ++cx) {
        double mx = (cx + 0.5) * cell;
        if (q.blocked.test(cx, 0)) continue;
        if (mx >= x && mx <= 1.0)
            q.side_a.emplace_back(cx, 0);
        else if (mx <= 0.0)
            q.side_b.emplace_back(cx, 0);
    }
    ExtremalLength L = modulus_numeric(q, 1e-9);
    if (!L.finite) throw NumericError("L_of_x_numeric: sides not connected");
    return L.value;
}

double x_of_L(double L) {
    if (!(L > 0.0)) throw ConfigError("x_of_L: L must be > 0");
    double lo = 1e-12, hi = 1.0 - 1e-12;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (L_of_x(mid) < L)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace frontier
