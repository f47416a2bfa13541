#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "frontier/fit.hpp"
#include "frontier/rng.hpp"

namespace frontier {

// Shared experiment configuration for the exponent estimators.
struct ExperimentPlan {
    std::vector<double> radii;        // > 1, dyadic by default
    std::size_t trials_per_radius = 1000;
    double dt = 0.05;                 // Brownian increment variance per step
    std::size_t inner_samples = 200;  // Z_R moment estimator only
    Seed seed;
    int threads = 0;                  // 0 = all hardware threads
    // Called after each radius completes; lets the CLI stream partial
    // results so an interrupted run still leaves its finished radii behind.
    std::function<void(const FitPoint&)> on_point;

    // Raster resolution for cross-packet collision tests; the disconnection
    // test uses twice this (the event is macroscopic).
    double intersection_cell() const;
    double disconnection_cell() const;
};

std::vector<double> dyadic_radii(double lo, double hi);

// Radii whose success probability exceeds this are dropped from fits as
// pre-asymptotic (lowest radius only).
constexpr double kPreAsymptoticProb = 0.5;

// P(two packets of j and k paths from the unit circle to radius R stay
// disjoint) ~ R^-xi(j,k). Fraction per radius from (trials) independent
// pairs, weighted log-log fit.
PowerLawFit estimate_nonintersection(int j, int k, const ExperimentPlan& plan);

// P(j paths fail to disconnect circle 1 from circle R) ~ R^-xi(j,0).
PowerLawFit estimate_disconnection(int j, const ExperimentPlan& plan);

// Half-plane variant: all paths confined to the upper half-plane, packets
// disjoint when k >= 1 (k = 0 tests confinement only) ~ R^-xi~(j,k).
PowerLawFit estimate_halfplane(int j, int k, const ExperimentPlan& plan);

// E[Z_R^lambda] ~ R^-xi(j,lambda) by nested Monte Carlo: Z_R is estimated
// per outer trial as the fraction of inner_samples fresh paths avoiding the
// j-packet. Also returns the Jensen-bias diagnostic (same estimate at a
// quarter of the inner samples).
struct ZrMomentResult {
    PowerLawFit fit;
    PowerLawFit quarter_inner_fit;  // diagnostic: inner_samples / 4
};
ZrMomentResult estimate_zr_moment(int j, double lam, const ExperimentPlan& plan);

// Mean counts of exceptional cells/times of an n-step SRW for each dyadic
// size; count ~ n^(slope) and dimension = 2 * slope.
enum class DimensionKind { frontier, cut, pioneer };

struct DimensionCounts {
    PowerLawFit frontier_fit;  // slope field holds the growth exponent
    PowerLawFit cut_fit;
    PowerLawFit pioneer_fit;
    PowerLawFit box_check;     // box dimension of the largest walk's frontier
    double box_check_std_error = 0.0;
};
DimensionCounts dimension_counts(const std::vector<std::size_t>& sizes,
                                 std::size_t trials, Seed seed, int threads);

PowerLawFit estimate_dimension(DimensionKind kind,
                               const std::vector<std::size_t>& sizes,
                               std::size_t trials, Seed seed, int threads = 0);

double dimension_from_fit(const PowerLawFit& fit);

}  // namespace frontier
