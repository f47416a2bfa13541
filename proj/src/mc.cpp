#include "frontier/mc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <string>

#include "frontier/errors.hpp"
#include "frontier/grid.hpp"
#include "frontier/parallel.hpp"
#include "frontier/paths.hpp"
#include "frontier/unionfind.hpp"
#include "frontier/walk_geometry.hpp"

namespace frontier {

double ExperimentPlan::intersection_cell() const { return 0.25 * std::sqrt(dt); }
double ExperimentPlan::disconnection_cell() const { return 0.5 * std::sqrt(dt); }

std::vector<double> dyadic_radii(double lo, double hi) {
    if (!(lo > 1.0 && hi >= lo)) throw ConfigError("dyadic_radii: need 1 < lo <= hi");
    std::vector<double> out;
    for (double r = lo; r <= hi * (1.0 + 1e-12); r *= 2.0) out.push_back(r);
    return out;
}

PowerLawFit fit_power_law(std::vector<FitPoint> points) {
    std::size_t usable = 0;
    bool all_sigma = true;
    for (const auto& p : points) {
        if (!p.used) continue;
        if (!(p.value > 0.0))
            throw ConfigError("fit_power_law: nonpositive value at scale " +
                              std::to_string(p.scale));
        if (!(p.scale > 0.0))
            throw ConfigError("fit_power_law: nonpositive scale");
        if (p.sigma_log <= 0.0) all_sigma = false;
        ++usable;
    }
    if (usable < 3) throw ConfigError("fit_power_law: fewer than 3 usable points");

    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : points) {
        if (!p.used) continue;
        double w = all_sigma ? 1.0 / (p.sigma_log * p.sigma_log) : 1.0;
        double x = std::log(p.scale), y = std::log(p.value);
        sw += w;
        sx += w * x;
        sy += w * y;
        sxx += w * x * x;
        sxy += w * x * y;
    }
    double det = sw * sxx - sx * sx;
    if (!(det > 0.0)) throw ConfigError("fit_power_law: degenerate scale list");
    double beta = (sw * sxy - sx * sy) / det;    // d log(value) / d log(scale)
    double alpha = (sxx * sy - sx * sxy) / det;  // intercept

    double rss = 0, tss = 0, ybar = sy / sw;
    for (const auto& p : points) {
        if (!p.used) continue;
        double w = all_sigma ? 1.0 / (p.sigma_log * p.sigma_log) : 1.0;
        double x = std::log(p.scale), y = std::log(p.value);
        double r = y - (alpha + beta * x);
        rss += w * r * r;
        tss += w * (y - ybar) * (y - ybar);
    }

    PowerLawFit fit;
    fit.slope = -beta;  // decay exponents positive
    fit.intercept = alpha;
    double var_beta = sw / det;
    if (!all_sigma) {
        double s2 = usable > 2 ? rss / static_cast<double>(usable - 2) : 0.0;
        var_beta *= s2;
    }
    fit.std_error = std::sqrt(var_beta);
    fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : 1.0;
    fit.points = std::move(points);
    return fit;
}

// ---------------------------------------------------------------------------
// Trial kernels. Paths are streamed straight into a reusable per-thread
// bitmap arena instead of materializing Path2D objects; the RNG consumption
// order matches sample_to_radius exactly (one angle draw, then two normals
// per step), which the estimator-vs-GridMask equivalence tests rely on.

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Arena {
    double cell = 0.0;
    int half = 0;   // window is [-half, half) in cell coordinates
    int width = 0;
    std::vector<std::uint64_t> occ;
    std::vector<std::uint8_t> seen;   // BFS marks (disconnection only)
    std::vector<std::int32_t> queue;
    std::vector<std::int32_t> inner;  // free-agnostic inner-circle cell list

    void ensure(double R, double cell_size, bool bfs) {
        int need = static_cast<int>(std::ceil(R / cell_size)) + 3;
        if (cell != cell_size || need > half) {
            cell = cell_size;
            half = need;
            width = 2 * half;
            occ.assign((static_cast<std::size_t>(width) * width + 63) / 64, 0);
            inner.clear();
            int lim = static_cast<int>(std::ceil(1.0 / cell)) + 2;
            for (int cy = -lim; cy <= lim; ++cy)
                for (int cx = -lim; cx <= lim; ++cx)
                    if (square_hits_circle(cx, cy, 1.0))
                        inner.push_back(index(cx, cy));
        }
        std::memset(occ.data(), 0, occ.size() * sizeof(std::uint64_t));
        if (bfs) seen.assign(static_cast<std::size_t>(width) * width, 0);
    }

    std::int32_t index(int cx, int cy) const {
        return static_cast<std::int32_t>((cy + half) * width + (cx + half));
    }
    bool in_window(int cx, int cy) const {
        return cx >= -half && cy >= -half && cx < half && cy < half;
    }
    bool test(std::int32_t i) const { return (occ[i >> 6] >> (i & 63)) & 1u; }
    void set(std::int32_t i) { occ[i >> 6] |= std::uint64_t{1} << (i & 63); }

    bool square_hits_circle(int cx, int cy, double r) const {
        double x0 = cx * cell, x1 = x0 + cell, y0 = cy * cell, y1 = y0 + cell;
        double dx = x0 > 0 ? x0 : (x1 < 0 ? -x1 : 0.0);
        double dy = y0 > 0 ? y0 : (y1 < 0 ? -y1 : 0.0);
        double mindist2 = dx * dx + dy * dy;
        double mx = std::max(std::fabs(x0), std::fabs(x1));
        double my = std::max(std::fabs(y0), std::fabs(y1));
        return mindist2 <= r * r && r * r <= mx * mx + my * my;
    }
    double min_dist2(int cx, int cy) const {
        double x0 = cx * cell, x1 = x0 + cell, y0 = cy * cell, y1 = y0 + cell;
        double dx = x0 > 0 ? x0 : (x1 < 0 ? -x1 : 0.0);
        double dy = y0 > 0 ? y0 : (y1 < 0 ? -y1 : 0.0);
        return dx * dx + dy * dy;
    }
};

enum class PathEnd { reached, aborted, left_halfplane };

// Stream one Brownian path from the unit circle to radius R. visit(cx, cy)
// is called for every supercover cell when rasterizing; returning false
// aborts the path (and the caller's trial).
template <bool Rasterize, bool Confine, class Visit>
PathEnd stream_path(double R, double dt, CounterRng& rng, double inv_cell,
                    Visit&& visit) {
    double angle = rng.uniform(0.0, kTwoPi);
    double px = std::cos(angle), py = std::sin(angle);
    if constexpr (Confine) {
        if (py <= 0.0) return PathEnd::left_halfplane;
    }
    bool alive = true;
    if constexpr (Rasterize) {
        if (!visit(cell_floor(px * inv_cell), cell_floor(py * inv_cell)))
            return PathEnd::aborted;
    }
    const double sd = std::sqrt(dt);
    const double R2 = R * R;
    while (alive) {
        double nx = px + sd * rng.normal();
        double ny = py + sd * rng.normal();
        if (nx * nx + ny * ny >= R2) {
            // clip onto |z| = R
            double dx = nx - px, dy = ny - py;
            double a = dx * dx + dy * dy;
            double b = 2.0 * (px * dx + py * dy);
            double c = px * px + py * py - R2;
            double s = (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a);
            nx = px + s * dx;
            ny = py + s * dy;
            alive = false;
        }
        if constexpr (Confine) {
            if (ny <= 0.0) return PathEnd::left_halfplane;
        }
        if constexpr (Rasterize) {
            bool ok = true;
            traverse_cells(px * inv_cell, py * inv_cell, nx * inv_cell, ny * inv_cell,
                           [&](int cx, int cy) {
                               if (ok && !visit(cx, cy)) ok = false;
                           });
            if (!ok) return PathEnd::aborted;
        }
        px = nx;
        py = ny;
    }
    return PathEnd::reached;
}

FitPoint probability_point(double scale, std::size_t successes, std::size_t trials) {
    FitPoint p;
    p.scale = scale;
    p.n_samples = trials;
    double ph = static_cast<double>(successes) / static_cast<double>(trials);
    p.value = ph;
    if (successes == 0) {
        p.used = false;
    } else {
        // stderr of log(p^) from the binomial
        p.sigma_log = std::sqrt((1.0 - ph) / (static_cast<double>(trials) * ph));
        if (successes == trials) p.sigma_log = 1.0 / std::sqrt(static_cast<double>(trials));
    }
    return p;
}

void apply_drop_rules(std::vector<FitPoint>& points) {
    // The approximate power law is asymptotic: leading radii whose success
    // probability is still above 1/2 are pre-asymptotic and excluded. For
    // slowly decaying events (disconnection) that can be every radius, so
    // the largest three are always kept; their pre-asymptotic status is
    // visible in the recorded values.
    std::size_t usable = 0;
    for (const auto& p : points) usable += p.used ? 1 : 0;
    for (auto& p : points) {
        if (usable <= 3) break;
        if (!p.used) continue;
        if (p.value <= kPreAsymptoticProb) break;
        p.used = false;
        --usable;
    }
    for (const auto& p : points)
        if (!p.used && p.value == 0.0)
            std::fprintf(stderr,
                         "warning: radius %g dropped (no successes)\n", p.scale);
}

double mean_of(const std::vector<double>& vals) {
    return pairwise_sum(vals) / static_cast<double>(vals.size());
}

FitPoint moment_point(double scale, const std::vector<double>& vals) {
    FitPoint p;
    p.scale = scale;
    p.n_samples = vals.size();
    double mean = mean_of(vals);
    std::vector<double> sq(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) sq[i] = vals[i] * vals[i];
    double m2 = mean_of(sq);
    double var_mean = (m2 - mean * mean) / static_cast<double>(vals.size());
    p.value = mean;
    if (mean > 0.0 && var_mean > 0.0)
        p.sigma_log = std::sqrt(var_mean) / mean;
    else if (mean <= 0.0)
        p.used = false;
    return p;
}

void check_plan(const ExperimentPlan& plan) {
    if (plan.radii.size() < 3) throw ConfigError("plan: need >= 3 radii");
    for (double r : plan.radii)
        if (!(r > 1.0)) throw ConfigError("plan: radii must be > 1");
    if (!std::is_sorted(plan.radii.begin(), plan.radii.end()))
        throw ConfigError("plan: radii must be increasing");
    if (plan.trials_per_radius < 50) throw ConfigError("plan: too few trials");
    if (!(plan.dt > 0.0)) throw ConfigError("plan: dt must be > 0");
}

}  // namespace

PowerLawFit estimate_nonintersection(int j, int k, const ExperimentPlan& plan) {
    if (j < 1 || k < 1) throw ConfigError("estimate_nonintersection: j, k >= 1");
    check_plan(plan);
    const double cell = plan.intersection_cell();
    const double inv_cell = 1.0 / cell;
    const std::size_t trials = plan.trials_per_radius;
    const int nthreads = effective_threads(plan.threads);
    std::vector<Arena> arenas(nthreads);

    std::vector<FitPoint> points;
    for (std::size_t ri = 0; ri < plan.radii.size(); ++ri) {
        const double R = plan.radii[ri];
        std::vector<std::uint8_t> ok(trials, 0);
        parallel_trials(trials, plan.threads, [&](std::size_t t) {
            Arena& ar = arenas[worker_index()];
            ar.ensure(R, cell, false);
            CounterRng rng(plan.seed.with_stream(ri * trials + t));
            for (int p = 0; p < j; ++p)
                stream_path<true, false>(R, plan.dt, rng, inv_cell,
                                         [&](int cx, int cy) {
                                             ar.set(ar.index(cx, cy));
                                             return true;
                                         });
            bool disjoint = true;
            for (int p = 0; p < k && disjoint; ++p) {
                PathEnd e = stream_path<true, false>(
                    R, plan.dt, rng, inv_cell, [&](int cx, int cy) {
                        return !ar.test(ar.index(cx, cy));
                    });
                if (e == PathEnd::aborted) disjoint = false;
            }
            ok[t] = disjoint ? 1 : 0;
        });
        std::size_t succ = 0;
        for (auto v : ok) succ += v;
        points.push_back(probability_point(R, succ, trials));
        if (plan.on_point) plan.on_point(points.back());
    }
    apply_drop_rules(points);
    return fit_power_law(std::move(points));
}

PowerLawFit estimate_disconnection(int j, const ExperimentPlan& plan) {
    if (j < 1) throw ConfigError("estimate_disconnection: j >= 1");
    check_plan(plan);
    const double cell = plan.disconnection_cell();
    const double inv_cell = 1.0 / cell;
    const std::size_t trials = plan.trials_per_radius;
    const int nthreads = effective_threads(plan.threads);
    std::vector<Arena> arenas(nthreads);

    std::vector<FitPoint> points;
    for (std::size_t ri = 0; ri < plan.radii.size(); ++ri) {
        const double R = plan.radii[ri];
        std::vector<std::uint8_t> ok(trials, 0);
        parallel_trials(trials, plan.threads, [&](std::size_t t) {
            Arena& ar = arenas[worker_index()];
            ar.ensure(R, cell, true);
            CounterRng rng(plan.seed.with_stream(ri * trials + t));
            for (int p = 0; p < j; ++p)
                stream_path<true, false>(R, plan.dt, rng, inv_cell,
                                         [&](int cx, int cy) {
                                             ar.set(ar.index(cx, cy));
                                             return true;
                                         });
            // BFS through free cells from the inner circle; connected to the
            // outer circle means the union does NOT disconnect (Z_R > 0).
            ar.queue.clear();
            for (std::int32_t i : ar.inner) {
                if (ar.test(i) || ar.seen[i]) continue;
                ar.seen[i] = 1;
                ar.queue.push_back(i);
            }
            bool connected = false;
            const double R2 = R * R;
            // Integer quick-accept: cells whose center is well inside the
            // disk need no exact square-circle test.
            const double rc = R / cell;
            const std::int64_t safe2 =
                static_cast<std::int64_t>(std::floor((rc - 2.0) * (rc - 2.0)));
            std::size_t head = 0;
            while (head < ar.queue.size() && !connected) {
                std::int32_t i = ar.queue[head++];
                int cx = i % ar.width - ar.half, cy = i / ar.width - ar.half;
                std::int64_t c2 = static_cast<std::int64_t>(cx) * cx +
                                  static_cast<std::int64_t>(cy) * cy;
                if (c2 > safe2 && ar.square_hits_circle(cx, cy, R)) {
                    connected = true;
                    break;
                }
                const int nx[4] = {cx - 1, cx + 1, cx, cx};
                const int ny[4] = {cy, cy, cy - 1, cy + 1};
                for (int d = 0; d < 4; ++d) {
                    std::int64_t n2 = static_cast<std::int64_t>(nx[d]) * nx[d] +
                                      static_cast<std::int64_t>(ny[d]) * ny[d];
                    if (n2 > safe2) {
                        if (!ar.in_window(nx[d], ny[d])) continue;
                        if (ar.min_dist2(nx[d], ny[d]) > R2) continue;
                    }
                    std::int32_t nidx = ar.index(nx[d], ny[d]);
                    if (ar.seen[nidx] || ar.test(nidx)) continue;
                    ar.seen[nidx] = 1;
                    ar.queue.push_back(nidx);
                }
            }
            for (std::int32_t i : ar.queue) ar.seen[i] = 0;  // cheap clear
            ok[t] = connected ? 1 : 0;
        });
        std::size_t succ = 0;
        for (auto v : ok) succ += v;
        points.push_back(probability_point(R, succ, trials));
        if (plan.on_point) plan.on_point(points.back());
    }
    apply_drop_rules(points);
    return fit_power_law(std::move(points));
}

PowerLawFit estimate_halfplane(int j, int k, const ExperimentPlan& plan) {
    if (j < 1 || k < 0) throw ConfigError("estimate_halfplane: j >= 1, k >= 0");
    check_plan(plan);
    const double cell = plan.intersection_cell();
    const double inv_cell = 1.0 / cell;
    const std::size_t trials = plan.trials_per_radius;
    const int nthreads = effective_threads(plan.threads);
    std::vector<Arena> arenas(nthreads);

    std::vector<FitPoint> points;
    for (std::size_t ri = 0; ri < plan.radii.size(); ++ri) {
        const double R = plan.radii[ri];
        std::vector<std::uint8_t> ok(trials, 0);
        parallel_trials(trials, plan.threads, [&](std::size_t t) {
            Arena& ar = arenas[worker_index()];
            CounterRng rng(plan.seed.with_stream(ri * trials + t));
            bool success = true;
            if (k == 0) {
                // confinement only, no rasterization needed
                for (int p = 0; p < j && success; ++p)
                    if (stream_path<false, true>(R, plan.dt, rng, inv_cell,
                                                 [](int, int) { return true; }) !=
                        PathEnd::reached)
                        success = false;
            } else {
                ar.ensure(R, cell, false);
                for (int p = 0; p < j && success; ++p)
                    if (stream_path<true, true>(R, plan.dt, rng, inv_cell,
                                                [&](int cx, int cy) {
                                                    ar.set(ar.index(cx, cy));
                                                    return true;
                                                }) != PathEnd::reached)
                        success = false;
                for (int p = 0; p < k && success; ++p)
                    if (stream_path<true, true>(R, plan.dt, rng, inv_cell,
                                                [&](int cx, int cy) {
                                                    return !ar.test(ar.index(cx, cy));
                                                }) != PathEnd::reached)
                        success = false;
            }
            ok[t] = success ? 1 : 0;
        });
        std::size_t succ = 0;
        for (auto v : ok) succ += v;
        points.push_back(probability_point(R, succ, trials));
        if (plan.on_point) plan.on_point(points.back());
    }
    apply_drop_rules(points);
    return fit_power_law(std::move(points));
}

ZrMomentResult estimate_zr_moment(int j, double lam, const ExperimentPlan& plan) {
    if (j < 1) throw ConfigError("estimate_zr_moment: j >= 1");
    if (!(lam > 0.0)) throw ConfigError("estimate_zr_moment: lambda must be > 0");
    if (plan.inner_samples < 100)
        throw ConfigError("estimate_zr_moment: inner_samples >= 100");
    check_plan(plan);
    const double cell = plan.intersection_cell();
    const double inv_cell = 1.0 / cell;
    const std::size_t trials = plan.trials_per_radius;
    const std::size_t inner = plan.inner_samples;
    const std::size_t quarter = inner / 4;
    const int nthreads = effective_threads(plan.threads);
    std::vector<Arena> arenas(nthreads);

    std::vector<FitPoint> points, qpoints;
    for (std::size_t ri = 0; ri < plan.radii.size(); ++ri) {
        const double R = plan.radii[ri];
        std::vector<double> vals(trials, 0.0), qvals(trials, 0.0);
        parallel_trials(trials, plan.threads, [&](std::size_t t) {
            Arena& ar = arenas[worker_index()];
            ar.ensure(R, cell, false);
            CounterRng rng(plan.seed.with_stream(ri * trials + t));
            for (int p = 0; p < j; ++p)
                stream_path<true, false>(R, plan.dt, rng, inv_cell,
                                         [&](int cx, int cy) {
                                             ar.set(ar.index(cx, cy));
                                             return true;
                                         });
            std::size_t avoid = 0, avoid_q = 0;
            for (std::size_t s = 0; s < inner; ++s) {
                PathEnd e = stream_path<true, false>(
                    R, plan.dt, rng, inv_cell, [&](int cx, int cy) {
                        return !ar.test(ar.index(cx, cy));
                    });
                if (e == PathEnd::reached) {
                    ++avoid;
                    if (s < quarter) ++avoid_q;
                }
            }
            double z = static_cast<double>(avoid) / static_cast<double>(inner);
            double zq = static_cast<double>(avoid_q) / static_cast<double>(quarter);
            vals[t] = std::pow(z, lam);
            qvals[t] = std::pow(zq, lam);
        });
        points.push_back(moment_point(R, vals));
        qpoints.push_back(moment_point(R, qvals));
        if (plan.on_point) plan.on_point(points.back());
    }
    apply_drop_rules(points);
    apply_drop_rules(qpoints);
    ZrMomentResult out;
    out.fit = fit_power_law(std::move(points));
    out.quarter_inner_fit = fit_power_law(std::move(qpoints));
    return out;
}

// ---------------------------------------------------------------------------
// Walk dimension counts.

namespace {

std::size_t frontier_cell_count(const LatticeWalk& walk) {
    return frontier(rasterize_walk(walk)).count();
}

}  // namespace

DimensionCounts dimension_counts(const std::vector<std::size_t>& sizes,
                                 std::size_t trials, Seed seed, int threads) {
    if (sizes.size() < 3) throw ConfigError("dimension_counts: need >= 3 sizes");
    if (trials < 8) throw ConfigError("dimension_counts: too few trials");
    std::vector<FitPoint> fpts, cpts, ppts;
    std::vector<double> box_slopes, box_fit_ses;

    for (std::size_t si = 0; si < sizes.size(); ++si) {
        const std::size_t n = sizes[si];
        if (n < 256) throw ConfigError("dimension_counts: sizes must be >= 256");
        std::vector<double> fc(trials), cc(trials), pc(trials);
        const bool largest = si + 1 == sizes.size();
        const std::size_t box_trials = largest ? std::min<std::size_t>(trials, 12) : 0;
        std::vector<double> bslope(box_trials, 0.0), bfit_se(box_trials, 0.0);
        parallel_trials(trials, threads, [&](std::size_t t) {
            LatticeWalk w = sample_srw(n, seed.with_stream(si * trials + t));
            fc[t] = static_cast<double>(frontier_cell_count(w));
            cc[t] = static_cast<double>(cut_times(w).size());
            pc[t] = static_cast<double>(pioneer_times(w).size());
            if (t < box_trials) {
                GridMask fr = frontier(rasterize_walk(w));
                std::vector<std::complex<double>> pts;
                pts.reserve(fr.count());
                for (int y = fr.y0; y < fr.y0 + fr.height; ++y)
                    for (int x = fr.x0; x < fr.x0 + fr.width; ++x)
                        if (fr.test(x, y))
                            pts.emplace_back(x + 0.5, y + 0.5);
                // Box scales must sit in the fractal window, between the
                // lattice microstructure (local dimension ~1 below scale ~8)
                // and the set diameter.
                double base = std::min(fr.width, fr.height) / 8.0;
                std::vector<double> scales{base / 8.0, base / 4.0, base / 2.0, base};
                if (base / 8.0 < 2.0) scales = {2.0, 4.0, 8.0, 16.0};
                PowerLawFit bf = box_dimension(pts, scales);
                bslope[t] = -bf.slope;
                bfit_se[t] = bf.std_error;
            }
        });
        double scale = static_cast<double>(n);
        fpts.push_back(moment_point(scale, fc));
        // cut counts can be zero on small walks; moment_point drops those
        cpts.push_back(moment_point(scale, cc));
        ppts.push_back(moment_point(scale, pc));
        for (double b : bslope) box_slopes.push_back(b);
        for (double e : bfit_se) box_fit_ses.push_back(e);
    }

    auto growth_fit = [](std::vector<FitPoint> pts) {
        PowerLawFit f = fit_power_law(std::move(pts));
        f.slope = -f.slope;  // growth convention for counts
        return f;
    };
    DimensionCounts out;
    out.frontier_fit = growth_fit(std::move(fpts));
    out.cut_fit = growth_fit(std::move(cpts));
    out.pioneer_fit = growth_fit(std::move(ppts));

    // Box-counting cross-check on the largest size: mean slope with the
    // spread across trials as its error bar.
    double bsum = 0.0;
    for (double b : box_slopes) bsum += b;
    double bmean = bsum / static_cast<double>(box_slopes.size());
    double bvar = 0.0;
    for (double b : box_slopes) bvar += (b - bmean) * (b - bmean);
    bvar /= static_cast<double>(box_slopes.size() * (box_slopes.size() - 1));
    // The per-fit regression error reflects the curvature of log N(s) across
    // the scale window; it is systematic across walks, so it adds to the
    // trial spread instead of averaging away.
    double fit_se = 0.0;
    for (double e : box_fit_ses) fit_se += e;
    fit_se /= static_cast<double>(box_fit_ses.size());
    out.box_check.slope = bmean;
    out.box_check.std_error = std::sqrt(bvar + fit_se * fit_se);
    out.box_check_std_error = out.box_check.std_error;
    return out;
}

PowerLawFit estimate_dimension(DimensionKind kind,
                               const std::vector<std::size_t>& sizes,
                               std::size_t trials, Seed seed, int threads) {
    DimensionCounts c = dimension_counts(sizes, trials, seed, threads);
    switch (kind) {
        case DimensionKind::frontier: return c.frontier_fit;
        case DimensionKind::cut: return c.cut_fit;
        case DimensionKind::pioneer: return c.pioneer_fit;
    }
    throw ConfigError("estimate_dimension: unknown kind");
}

double dimension_from_fit(const PowerLawFit& fit) { return 2.0 * fit.slope; }

}  // namespace frontier
