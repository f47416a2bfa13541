#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "frontier/extremal.hpp"
#include "frontier/fit.hpp"
#include "frontier/grid.hpp"
#include "frontier/paths.hpp"
#include "frontier/rng.hpp"

namespace frontier {

// One elementary chordal slit step: constant drive w over duration delta.
// The exact one-step solution map is h(z) = w + sqrt((z-w)^2 + 4*delta).
struct SlitStep {
    double duration;
    double drive;
};

// Composition g_t = h_n o ... o h_1 of elementary slit maps ("zipper"
// discretization of the chordal Loewner flow). Immutable after building.
struct ConformalChain {
    std::vector<SlitStep> steps;

    double total_time() const {
        double t = 0.0;
        for (const auto& s : steps) t += s.duration;
        return t;
    }
};

// Append one exact slit step.
void chordal_advance(ConformalChain& chain, double drive, double delta);

// Chain built from a sampled driving function (step k carries the drive
// value at its right endpoint).
ConformalChain chain_from_driving(const DrivingFunction& drive);

struct EvalResult {
    bool swallowed = false;
    std::complex<double> gz;   // valid when !swallowed
    std::complex<double> dgz;  // chain-rule derivative
    double swallow_time = 0.0; // valid when swallowed
    std::size_t swallow_step = 0;
};

// Forward composition with derivative accumulation. Interior points stay
// interior; points on the real axis report a swallowed signal when the
// drive jumps across them.
EvalResult evaluate(const ConformalChain& chain, std::complex<double> z);

// Trace gamma(t_i) = g_{t_i}^{-1}(W_{t_i}) by backward composition of the
// inverse slit maps, sampled every `decimation` drive steps.
Path2D chordal_trace(const DrivingFunction& drive, std::size_t decimation = 8);

// Worst |g_{t_i}(gamma(t_i)) - W_{t_i}| over the sampled times, with the
// preimage held at full internal precision between the backward and forward
// passes (the derivative near the tip amplifies any double rounding of the
// handoff point far above the consistency it is meant to measure).
double chordal_roundtrip_error(const DrivingFunction& drive,
                               std::size_t decimation = 50);

// State of the SLE6 boundary-point tracking of the rectangle-exponent
// experiment: images a = g_t(0), b = g_t(1), normalized drive position
// w_t = (W_t - a)/(b - a), and u_t = f_t'(1) = g_t'(1)/(b - a).
struct SleBoundaryState {
    ConformalChain chain;  // filled only when requested
    double w = 0.0;
    double u = 1.0;
    double g0 = 0.0;
    double g1 = 1.0;
    double time = 0.0;
    std::size_t steps = 0;
};

enum class SwallowSide { zero_side, one_side };

struct SwallowResult {
    SwallowSide side;
    SleBoundaryState state;
};

// Chordal SLE6 from x in (0,1) toward infinity, stopped the first time the
// normalized drive w_t exits (0,1). Throws BudgetError when max_steps is
// exhausted first.
SwallowResult sle6_swallow_experiment(double x, double dt, Seed seed,
                                      std::size_t max_steps = 100000000,
                                      bool store_chain = false);

// Rectangle-exponent estimator: for each x, Monte Carlo mean of
// ((1-x) u_T)^lambda over zero-side trials (one-side trials contribute 0,
// the e^(-lambda*inf) convention), regressed against L_of_x(x). The fit
// abscissa is exp(L), so fit.slope estimates xi_hat(SLE6, lambda).
// synthetic_driver replaces every trial value by exp(-lambda L(x)) and must
// recover slope = lambda exactly (regression plumbing check).
PowerLawFit xi_hat_estimate(double lam, const std::vector<double>& x_grid,
                            std::size_t trials, double dt, Seed seed,
                            int threads = 0, bool synthetic_driver = false);

// Radial Loewner chain with the expanding normalization |g_t'(0)| = e^t,
// driven by theta_t (zeta = exp(i theta)). Step k covers duration dt with
// the right-endpoint drive value. The per-step map is exact:
// g/(1+g)^2 = e^dt * (z/zeta) / (1 + z/zeta)^2, rotated by zeta.
struct RadialChain {
    double dt = 0.0;
    std::vector<double> thetas;  // theta at the right endpoint of each step

    double total_time() const { return dt * static_cast<double>(thetas.size()); }
};

// Forward map with derivative; swallowed points report the signal.
EvalResult radial_evaluate(const RadialChain& chain, std::complex<double> z);

// gamma(t_k) = g_{t_k}^{-1}(zeta_{t_k}) by backward composition of the
// first k steps.
std::complex<double> radial_trace_point(const RadialChain& chain, std::size_t k);

// Radial SLE_kappa from 1 toward 0, stopped when the trace reaches
// |z| <= r; returns the rasterized trace, the annulus observable
// L = pi x extremal distance between the circles in the annulus minus the
// hull, and the stopping data.
struct RadialRunResult {
    GridMask trace_mask;
    Path2D trace;
    double stop_time = 0.0;
    ExtremalLength L;
};
RadialRunResult radial_hull_to_radius(double kappa, double r, double dt, Seed seed,
                                      int cells_per_unit = 128,
                                      std::size_t max_steps = 4000000,
                                      std::size_t trace_stride = 4);

// E[e^-L] ~ r^xi(SLE6,1) over a grid of radii; fit abscissa 1/r so the
// decay-positive slope estimates the radial exponent.
PowerLawFit xi_radial_estimate(double lam, const std::vector<double>& radii,
                               std::size_t trials, double dt, Seed seed,
                               int threads = 0, int cells_per_unit = 128);

}  // namespace frontier
