#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "frontier/rng.hpp"

namespace frontier {

// A sampled continuous planar path: complex points with strictly increasing
// times starting at 0.
struct Path2D {
    std::vector<std::complex<double>> points;
    std::vector<double> times;

    std::size_t size() const { return points.size(); }
};

// Nearest-neighbor walk on the square lattice.
struct LatticeWalk {
    std::vector<std::pair<int, int>> sites;

    std::size_t steps() const { return sites.empty() ? 0 : sites.size() - 1; }
};

// Real-valued driving function sampled on a uniform time grid.
struct DrivingFunction {
    double dt = 0.0;
    std::vector<double> values;
};

// Planar Brownian path of n steps from `start`, per-coordinate increment
// variance dt. Deterministic given the seed.
Path2D sample_brownian_increments(std::size_t n, double dt, Seed seed,
                                  std::complex<double> start = {0.0, 0.0});

// Brownian path started on the unit circle (at the given angle, or uniform
// when std::nullopt), run until |B| >= R and linearly interpolated onto the
// circle |z| = R.
Path2D sample_to_radius(double R, double dt, Seed seed,
                        std::optional<double> start_angle = std::nullopt);

// Same, drawing from an existing engine; multi-path trials sample their
// paths sequentially from one per-trial stream.
Path2D sample_to_radius(double R, double dt, CounterRng& rng,
                        std::optional<double> start_angle = std::nullopt);

// Simple random walk of n steps.
LatticeWalk sample_srw(std::size_t n, Seed seed, std::pair<int, int> start = {0, 0});

// Euler-Maruyama for dY = (2/(kappa Y)) dt - dbeta, absorbed at sqrt(dt).
struct BesselHit {
    bool hit = false;
    double hit_time = 0.0;
};
BesselHit sample_bessel_hit(double kappa, double y0, double dt, double horizon,
                            Seed seed);

// W_t = sqrt(kappa) * beta_t on a uniform grid; W_0 = 0.
DrivingFunction sample_driving(double kappa, std::size_t n, double dt, Seed seed);

}  // namespace frontier
