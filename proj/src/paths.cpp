#include "frontier/paths.hpp"

#include <cmath>
#include <string>

#include "frontier/errors.hpp"

namespace frontier {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Path2D sample_brownian_increments(std::size_t n, double dt, Seed seed,
                                  std::complex<double> start) {
    if (!(dt > 0.0)) throw ConfigError("sample_brownian_increments: dt must be > 0");
    CounterRng rng(seed);
    Path2D p;
    p.points.reserve(n + 1);
    p.times.reserve(n + 1);
    double sd = std::sqrt(dt);
    std::complex<double> z = start;
    p.points.push_back(z);
    p.times.push_back(0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        // draw order pinned: x before y (argument evaluation order is not)
        double dx = sd * rng.normal();
        double dy = sd * rng.normal();
        z += std::complex<double>(dx, dy);
        p.points.push_back(z);
        p.times.push_back(dt * static_cast<double>(i));
    }
    return p;
}

Path2D sample_to_radius(double R, double dt, Seed seed,
                        std::optional<double> start_angle) {
    CounterRng rng(seed);
    return sample_to_radius(R, dt, rng, start_angle);
}

Path2D sample_to_radius(double R, double dt, CounterRng& rng,
                        std::optional<double> start_angle) {
    if (!(R > 1.0)) throw ConfigError("sample_to_radius: R must be > 1");
    if (!(dt > 0.0)) throw ConfigError("sample_to_radius: dt must be > 0");
    double angle = start_angle ? *start_angle : rng.uniform(0.0, kTwoPi);
    std::complex<double> z = std::polar(1.0, angle);
    Path2D p;
    p.points.push_back(z);
    p.times.push_back(0.0);
    double sd = std::sqrt(dt);
    double t = 0.0;
    while (true) {
        std::complex<double> prev = z;
        double dx = sd * rng.normal();
        double dy = sd * rng.normal();
        z += std::complex<double>(dx, dy);
        t += dt;
        if (std::norm(z) >= R * R) {
            // Clip the final increment onto |z| = R: solve |prev + s*(z-prev)| = R
            // for s in (0,1].
            std::complex<double> d = z - prev;
            double a = std::norm(d);
            double b = 2.0 * (prev.real() * d.real() + prev.imag() * d.imag());
            double c = std::norm(prev) - R * R;
            double s = (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a);
            std::complex<double> hit = prev + s * d;
            p.points.push_back(hit);
            p.times.push_back(t - dt + s * dt);
            return p;
        }
        p.points.push_back(z);
        p.times.push_back(t);
    }
}

LatticeWalk sample_srw(std::size_t n, Seed seed, std::pair<int, int> start) {
    static constexpr int dx[4] = {1, -1, 0, 0};
    static constexpr int dy[4] = {0, 0, 1, -1};
    CounterRng rng(seed);
    LatticeWalk w;
    w.sites.reserve(n + 1);
    int x = start.first, y = start.second;
    w.sites.emplace_back(x, y);
    for (std::size_t i = 0; i < n; ++i) {
        int d = rng.lattice_step();
        x += dx[d];
        y += dy[d];
        w.sites.emplace_back(x, y);
    }
    return w;
}

BesselHit sample_bessel_hit(double kappa, double y0, double dt, double horizon,
                            Seed seed) {
    if (!(kappa > 0.0 && y0 > 0.0 && dt > 0.0 && horizon > 0.0))
        throw ConfigError("sample_bessel_hit: all parameters must be > 0");
    CounterRng rng(seed);
    double y = y0;
    double absorb = std::sqrt(dt);
    double sd = std::sqrt(dt);
    double t = 0.0;
    while (t < horizon) {
        y += 2.0 / (kappa * y) * dt - sd * rng.normal();
        t += dt;
        if (y <= absorb) return BesselHit{true, t};
    }
    return BesselHit{false, 0.0};
}

DrivingFunction sample_driving(double kappa, std::size_t n, double dt, Seed seed) {
    if (!(kappa >= 0.0)) throw ConfigError("sample_driving: kappa must be >= 0");
    if (!(dt > 0.0)) throw ConfigError("sample_driving: dt must be > 0");
    CounterRng rng(seed);
    DrivingFunction f;
    f.dt = dt;
    f.values.reserve(n + 1);
    double w = 0.0;
    double sd = std::sqrt(kappa * dt);
    f.values.push_back(w);
    for (std::size_t i = 0; i < n; ++i) {
        w += sd * rng.normal();
        f.values.push_back(w);
    }
    return f;
}

}  // namespace frontier
