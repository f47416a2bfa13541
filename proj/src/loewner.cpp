#include "frontier/loewner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frontier/errors.hpp"
#include "frontier/parallel.hpp"

namespace frontier {

namespace {

using cplx = std::complex<double>;
// Chain compositions run in extended precision: several hundred nested
// square roots otherwise eat the 1e-8 inverse-consistency budget.
using lcplx = std::complex<long double>;

// sqrt with the branch mapping into the closed upper half-plane.
lcplx sqrt_upper(lcplx z) {
    lcplx s = std::sqrt(z);
    if (s.imag() < 0.0L) s = -s;
    return s;
}

}  // namespace

void chordal_advance(ConformalChain& chain, double drive, double delta) {
    if (!(delta > 0.0)) throw ConfigError("chordal_advance: delta must be > 0");
    chain.steps.push_back(SlitStep{delta, drive});
}

ConformalChain chain_from_driving(const DrivingFunction& drive) {
    if (drive.values.empty()) throw ConfigError("chain_from_driving: empty driving");
    ConformalChain c;
    c.steps.reserve(drive.values.size() - 1);
    for (std::size_t k = 1; k < drive.values.size(); ++k)
        c.steps.push_back(SlitStep{drive.dt, drive.values[k]});
    return c;
}

EvalResult evaluate(const ConformalChain& chain, cplx z) {
    EvalResult out;
    if (z.imag() < 0.0) throw ConfigError("evaluate: point below the real axis");
    double elapsed = 0.0;

    if (z.imag() == 0.0) {
        // Boundary point: the flow repels it from the drive within a step, so
        // swallowing happens exactly when the drive jumps across it.
        long double u = z.real();
        long double du = 1.0L;
        int side = 0;
        for (std::size_t k = 0; k < chain.steps.size(); ++k) {
            const auto& s = chain.steps[k];
            long double d = u - static_cast<long double>(s.drive);
            int sd = d > 0.0L ? 1 : (d < 0.0L ? -1 : 0);
            if (sd == 0 || (side != 0 && sd != side)) {
                out.swallowed = true;
                out.swallow_time = elapsed;
                out.swallow_step = k;
                return out;
            }
            side = sd;
            long double root = sqrtl(d * d + 4.0L * s.duration);
            du *= d / (sd > 0 ? root : -root);
            u = s.drive + (sd > 0 ? root : -root);
            elapsed += s.duration;
        }
        out.gz = static_cast<double>(u);
        out.dgz = static_cast<double>(du);
        return out;
    }

    lcplx g(z.real(), z.imag());
    lcplx dg = 1.0L;
    for (std::size_t k = 0; k < chain.steps.size(); ++k) {
        const auto& s = chain.steps[k];
        lcplx d = g - static_cast<long double>(s.drive);
        lcplx root = sqrt_upper(d * d + 4.0L * s.duration);
        if (!(std::abs(root) > 0.0L)) {
            out.swallowed = true;
            out.swallow_time = elapsed;
            out.swallow_step = k;
            return out;
        }
        dg *= d / root;
        g = static_cast<long double>(s.drive) + root;
        elapsed += s.duration;
    }
    out.gz = cplx(static_cast<double>(g.real()), static_cast<double>(g.imag()));
    out.dgz = cplx(static_cast<double>(dg.real()), static_cast<double>(dg.imag()));
    return out;
}

Path2D chordal_trace(const DrivingFunction& drive, std::size_t decimation) {
    if (drive.values.empty()) throw ConfigError("chordal_trace: empty driving");
    if (decimation == 0) decimation = 1;
    const std::size_t n = drive.values.size() - 1;
    Path2D path;
    path.points.emplace_back(drive.values[0], 0.0);
    path.times.push_back(0.0);
    if (n == 0) return path;
    for (std::size_t i = decimation; ; i += decimation) {
        if (i > n) i = n;
        // Backward composition of inverse slit maps f_k over steps k = i..1;
        // step k uses the right-endpoint drive value W_k.
        lcplx z(drive.values[i], 0.0L);
        for (std::size_t k = i; k >= 1; --k) {
            long double w = drive.values[k];
            lcplx d = z - w;
            lcplx zeta = d * d - 4.0L * drive.dt;
            lcplx root;
            if (z.imag() == 0.0L && zeta.imag() == 0.0L && zeta.real() >= 0.0L) {
                long double r = sqrtl(zeta.real());
                root = (d.real() >= 0.0L) ? lcplx(r, 0.0L) : lcplx(-r, 0.0L);
            } else {
                root = sqrt_upper(zeta);
            }
            z = w + root;
            if (std::isnan(static_cast<double>(z.real())) ||
                std::isnan(static_cast<double>(z.imag())))
                throw NumericError("chordal_trace: inverse branch failed at step " +
                                   std::to_string(k));
        }
        path.points.emplace_back(static_cast<double>(z.real()),
                                 static_cast<double>(z.imag()));
        path.times.push_back(drive.dt * static_cast<double>(i));
        if (i == n) break;
    }
    return path;
}

double chordal_roundtrip_error(const DrivingFunction& drive, std::size_t decimation) {
    if (drive.values.size() < 2) throw ConfigError("chordal_roundtrip_error: empty");
    if (decimation == 0) decimation = 1;
    const std::size_t n = drive.values.size() - 1;
    long double worst = 0.0L;
    for (std::size_t i = decimation; i <= n; i += decimation) {
        // backward to gamma(t_i)
        lcplx z(drive.values[i], 0.0L);
        for (std::size_t k = i; k >= 1; --k) {
            long double w = drive.values[k];
            lcplx d = z - w;
            lcplx zeta = d * d - 4.0L * drive.dt;
            lcplx root;
            if (z.imag() == 0.0L && zeta.imag() == 0.0L && zeta.real() >= 0.0L) {
                long double r = sqrtl(zeta.real());
                root = (d.real() >= 0.0L) ? lcplx(r, 0.0L) : lcplx(-r, 0.0L);
            } else {
                root = sqrt_upper(zeta);
            }
            z = w + root;
        }
        if (!(z.imag() > 0.0L)) continue;  // boundary-touching sample
        // forward through the same prefix
        for (std::size_t k = 1; k <= i; ++k) {
            lcplx d = z - static_cast<long double>(drive.values[k]);
            z = static_cast<long double>(drive.values[k]) +
                sqrt_upper(d * d + 4.0L * drive.dt);
        }
        worst = std::max(worst, std::abs(z - lcplx(drive.values[i], 0.0L)));
    }
    return static_cast<double>(worst);
}

SwallowResult sle6_swallow_experiment(double x, double dt, Seed seed,
                                      std::size_t max_steps, bool store_chain) {
    if (!(x > 0.0 && x < 1.0))
        throw ConfigError("sle6_swallow_experiment: x must be in (0,1)");
    if (!(dt > 0.0)) throw ConfigError("sle6_swallow_experiment: dt must be > 0");
    CounterRng rng(seed);

    // Scale-invariant stepping: delta = dt * min(W-a, b-W)^2, so the drive
    // jump is always the same fraction of the distance to the nearer
    // boundary image. This resolves starts arbitrarily close to 0 or 1,
    // and since the swallowing time has a polynomial tail (the hull can
    // keep growing while avoiding both rays, E[T] is infinite) it also
    // caps tail trials: the simulated time grows geometrically once the
    // gap is large, so deep tails cost O(log T) steps. A trial is absorbed
    // when the nearer distance falls below 1e-9 of the gap; the residual
    // wrong-side probability is of order (1e-9)^(1/3).
    constexpr double kAbsorbRel = 1e-9;
    SleBoundaryState st;
    double a = 0.0, b = 1.0, db = 1.0, W = x, t = 0.0;
    for (std::size_t step = 0; step < max_steps; ++step) {
        double gap = b - a;
        if (!(gap < 1e100))
            throw NumericError("sle6_swallow_experiment: gap overflow");
        double s = std::min(W - a, b - W);
        bool absorbed = s <= kAbsorbRel * gap;
        if (!absorbed) {
            double delta = dt * s * s;
            if (store_chain) st.chain.steps.push_back(SlitStep{delta, W});
            double da = W - a, dbv = b - W;
            double root_b = std::sqrt(dbv * dbv + 4.0 * delta);
            a = W - std::sqrt(da * da + 4.0 * delta);
            db *= dbv / root_b;
            b = W + root_b;
            t += delta;
            W += std::sqrt(6.0 * delta) * rng.normal();
        }
        if (absorbed || W <= a || W >= b) {
            st.w = (W - a) / (b - a);
            st.u = db / (b - a);
            st.g0 = a;
            st.g1 = b;
            st.time = t;
            st.steps = step + (absorbed ? 0 : 1);
            bool one_side = absorbed ? (b - W <= W - a) : (W >= b);
            return SwallowResult{
                one_side ? SwallowSide::one_side : SwallowSide::zero_side, st};
        }
    }
    throw BudgetError("sle6_swallow_experiment: step budget exhausted");
}

PowerLawFit xi_hat_estimate(double lam, const std::vector<double>& x_grid,
                            std::size_t trials, double dt, Seed seed, int threads,
                            bool synthetic_driver) {
    if (lam < 0.0) throw ConfigError("xi_hat_estimate: lambda must be >= 0");
    if (x_grid.size() < 3) throw ConfigError("xi_hat_estimate: need >= 3 x values");
    if (trials < 10) throw ConfigError("xi_hat_estimate: too few trials");
    std::vector<double> Ls;
    for (double x : x_grid) Ls.push_back(L_of_x(x));
    double lmin = *std::min_element(Ls.begin(), Ls.end());
    double lmax = *std::max_element(Ls.begin(), Ls.end());
    if (lmax / lmin < 3.0)
        throw ConfigError("xi_hat_estimate: x_grid must span a factor 3 in L_of_x");

    std::vector<FitPoint> points;
    for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
        const double x = x_grid[xi];
        const double L = Ls[xi];
        std::vector<double> vals(trials, 0.0);
        parallel_trials(trials, threads, [&](std::size_t tr) {
            if (synthetic_driver) {
                vals[tr] = std::exp(-lam * L);
                return;
            }
            SwallowResult r = sle6_swallow_experiment(
                x, dt, seed.with_stream(xi * trials + tr));
            if (r.side == SwallowSide::zero_side)
                vals[tr] = lam == 0.0 ? 1.0 : std::pow((1.0 - x) * r.state.u, lam);
        });
        double mean = pairwise_sum(vals) / static_cast<double>(trials);
        std::vector<double> sq(trials);
        for (std::size_t i = 0; i < trials; ++i) sq[i] = vals[i] * vals[i];
        double m2 = pairwise_sum(sq) / static_cast<double>(trials);
        double var_mean = (m2 - mean * mean) / static_cast<double>(trials);
        FitPoint p;
        p.scale = std::exp(L);
        p.value = mean;
        p.n_samples = trials;
        if (mean > 0.0 && var_mean > 0.0) p.sigma_log = std::sqrt(var_mean) / mean;
        if (!(mean > 0.0)) p.used = false;  // dropped with the zero-success rule
        points.push_back(p);
    }
    return fit_power_law(std::move(points));
}

// ---------------------------------------------------------------------------
// Radial evolution. psi(z) = z/(1+z)^2 maps the disk onto C minus [1/4,inf);
// the constant-drive solution of the radial equation with the expanding
// normalization is psi(g/zeta) = e^t psi(z/zeta).

namespace {

cplx koebe_psi(cplx z) { return z / ((1.0 + z) * (1.0 + z)); }

// Inverse of psi on its principal domain; the branch with G(m) ~ m at 0.
cplx koebe_inverse(cplx m) {
    if (std::abs(m) < 1e-3) {
        // Catalan series heads off the 1 - 2m - sqrt(1-4m) cancellation.
        return m * (1.0 + m * (2.0 + m * (5.0 + 14.0 * m)));
    }
    cplx root = std::sqrt(1.0 - 4.0 * m);
    return (1.0 - 2.0 * m - root) / (2.0 * m);
}

// d/dm of koebe_inverse via the implicit relation g = m (1+g)^2.
cplx koebe_inverse_deriv(cplx m, cplx g) {
    cplx one_g = 1.0 + g;
    return one_g * one_g / (1.0 - 2.0 * m * one_g);
}

}  // namespace

EvalResult radial_evaluate(const RadialChain& chain, cplx z) {
    EvalResult out;
    out.gz = z;
    out.dgz = 1.0;
    const double grow = std::exp(chain.dt);
    double elapsed = 0.0;
    for (std::size_t k = 0; k < chain.thetas.size(); ++k) {
        cplx zeta = std::polar(1.0, chain.thetas[k]);
        cplx zr = out.gz / zeta;
        cplx m = grow * koebe_psi(zr);
        // Swallowed when e^dt psi(z/zeta) lands on the slit image [1/4, inf).
        if (m.imag() == 0.0 && m.real() >= 0.25) {
            out.swallowed = true;
            out.swallow_time = elapsed;
            out.swallow_step = k;
            return out;
        }
        cplx g = koebe_inverse(m);
        cplx psi_d = (1.0 - zr) / ((1.0 + zr) * (1.0 + zr) * (1.0 + zr));
        out.dgz *= koebe_inverse_deriv(m, g) * grow * psi_d;
        out.gz = zeta * g;
        elapsed += chain.dt;
        if (std::isnan(out.gz.real()) || std::isnan(out.gz.imag())) {
            out.swallowed = true;
            out.swallow_time = elapsed;
            out.swallow_step = k;
            return out;
        }
    }
    return out;
}

std::complex<double> radial_trace_point(const RadialChain& chain, std::size_t k) {
    if (k > chain.thetas.size())
        throw ConfigError("radial_trace_point: index beyond chain");
    const double shrink = std::exp(-chain.dt);
    cplx z = std::polar(1.0, k == 0 ? 0.0 : chain.thetas[k - 1]);
    for (std::size_t i = k; i-- > 0;) {
        cplx zeta = std::polar(1.0, chain.thetas[i]);
        cplx m = shrink * koebe_psi(z / zeta);
        z = zeta * koebe_inverse(m);
        if (std::isnan(z.real()) || std::isnan(z.imag()))
            throw NumericError("radial_trace_point: inverse branch failed");
    }
    return z;
}

RadialRunResult radial_hull_to_radius(double kappa, double r, double dt, Seed seed,
                                      int cells_per_unit, std::size_t max_steps,
                                      std::size_t trace_stride) {
    if (!(r > 0.0 && r < 1.0))
        throw ConfigError("radial_hull_to_radius: r must be in (0,1)");
    if (!(kappa > 0.0 && dt > 0.0))
        throw ConfigError("radial_hull_to_radius: kappa and dt must be > 0");
    CounterRng rng(seed);
    const double sd = std::sqrt(kappa * dt);

    RadialChain chain;
    chain.dt = dt;
    RadialRunResult out;
    out.trace.points.emplace_back(1.0, 0.0);
    out.trace.times.push_back(0.0);

    double theta = 0.0;
    bool stopped = false;
    while (chain.thetas.size() < max_steps && !stopped) {
        for (std::size_t s = 0; s < trace_stride; ++s) {
            theta += sd * rng.normal();
            chain.thetas.push_back(theta);
        }
        cplx g = radial_trace_point(chain, chain.thetas.size());
        out.trace.points.push_back(g);
        out.trace.times.push_back(chain.total_time());
        if (std::abs(g) <= r) stopped = true;
    }
    if (!stopped)
        throw BudgetError("radial_hull_to_radius: step budget exhausted");
    out.stop_time = chain.total_time();

    // Rasterize the trace polyline and evaluate the annulus observable.
    Quadrilateral q = annulus_quadrilateral(r, cells_per_unit);
    out.trace_mask = rasterize(out.trace, q.blocked.cell_size);
    for (int cy = out.trace_mask.y0; cy < out.trace_mask.y0 + out.trace_mask.height;
         ++cy)
        for (int cx = out.trace_mask.x0; cx < out.trace_mask.x0 + out.trace_mask.width;
             ++cx)
            if (out.trace_mask.test(cx, cy) && q.blocked.in_window(cx, cy))
                q.blocked.set(cx, cy);
    auto not_blocked = [&](const std::pair<int, int>& c) {
        return !q.blocked.test(c.first, c.second);
    };
    std::vector<std::pair<int, int>> sa, sb;
    std::copy_if(q.side_a.begin(), q.side_a.end(), std::back_inserter(sa), not_blocked);
    std::copy_if(q.side_b.begin(), q.side_b.end(), std::back_inserter(sb), not_blocked);
    q.side_a = std::move(sa);
    q.side_b = std::move(sb);
    if (q.side_a.empty() || q.side_b.empty())
        out.L = ExtremalLength::infinite();
    else
        out.L = modulus_numeric(q, 1e-8);
    return out;
}

PowerLawFit xi_radial_estimate(double lam, const std::vector<double>& radii,
                               std::size_t trials, double dt, Seed seed, int threads,
                               int cells_per_unit) {
    if (!(lam > 0.0)) throw ConfigError("xi_radial_estimate: lambda must be > 0");
    if (radii.size() < 3) throw ConfigError("xi_radial_estimate: need >= 3 radii");
    std::vector<FitPoint> points;
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        const double r = radii[ri];
        std::vector<double> vals(trials, 0.0);
        parallel_trials(trials, threads, [&](std::size_t tr) {
            RadialRunResult run = radial_hull_to_radius(
                6.0, r, dt, seed.with_stream(ri * trials + tr), cells_per_unit);
            if (run.L.finite) vals[tr] = std::exp(-lam * run.L.value);
        });
        double mean = pairwise_sum(vals) / static_cast<double>(trials);
        std::vector<double> sq(trials);
        for (std::size_t i = 0; i < trials; ++i) sq[i] = vals[i] * vals[i];
        double m2 = pairwise_sum(sq) / static_cast<double>(trials);
        double var_mean = (m2 - mean * mean) / static_cast<double>(trials);
        FitPoint p;
        p.scale = 1.0 / r;  // decay-positive slope: E[e^-lam L] ~ r^xi
        p.value = mean;
        p.n_samples = trials;
        if (mean > 0.0 && var_mean > 0.0) p.sigma_log = std::sqrt(var_mean) / mean;
        if (!(mean > 0.0)) p.used = false;
        points.push_back(p);
    }
    // Same pre-asymptotic guard as the walk estimators: leading radii where
    // the observable still exceeds 1/2 flatten the fit; drop them while at
    // least three points remain.
    std::sort(points.begin(), points.end(),
              [](const FitPoint& a, const FitPoint& b) { return a.scale < b.scale; });
    std::size_t usable = 0;
    for (const auto& p : points) usable += p.used ? 1 : 0;
    for (auto& p : points) {
        if (usable <= 3) break;
        if (!p.used) continue;
        if (p.value <= 0.5) break;
        p.used = false;
        --usable;
    }
    return fit_power_law(std::move(points));
}

}  // namespace frontier
