#include <cmath>
#include <complex>

#include "doctest.h"
#include "frontier/errors.hpp"
#include "frontier/loewner.hpp"
#include "frontier/special.hpp"

using namespace frontier;
using cplx = std::complex<double>;

TEST_CASE("single slit step is the closed form sqrt(z^2+4t)") {
    ConformalChain c;
    chordal_advance(c, 0.0, 0.7);
    cplx z(0.3, 1.1);
    EvalResult e = evaluate(c, z);
    REQUIRE_FALSE(e.swallowed);
    cplx expect = std::sqrt(z * z + 4.0 * 0.7);
    if (expect.imag() < 0.0) expect = -expect;
    CHECK(std::abs(e.gz - expect) < 1e-14);

    // g_t(i) = sqrt(4t - 1) is real for t > 1/4; assert at t = 1.
    ConformalChain c1;
    chordal_advance(c1, 0.0, 1.0);
    EvalResult ei = evaluate(c1, cplx(0.0, 1.0));
    REQUIRE_FALSE(ei.swallowed);
    CHECK(std::abs(ei.gz - cplx(std::sqrt(3.0), 0.0)) < 1e-12);
}

TEST_CASE("empty chain is the identity") {
    ConformalChain c;
    EvalResult e = evaluate(c, cplx(1.5, 2.5));
    CHECK(e.gz == cplx(1.5, 2.5));
    CHECK(e.dgz == cplx(1.0, 0.0));
}

TEST_CASE("two half-steps equal one full step under constant drive") {
    ConformalChain one, two;
    chordal_advance(one, 0.8, 0.5);
    chordal_advance(two, 0.8, 0.25);
    chordal_advance(two, 0.8, 0.25);
    for (cplx z : {cplx(0.1, 0.4), cplx(-2.0, 0.01), cplx(3.0, 5.0)}) {
        EvalResult a = evaluate(one, z), b = evaluate(two, z);
        CHECK(std::abs(a.gz - b.gz) < 1e-12);
        CHECK(std::abs(a.dgz - b.dgz) < 1e-12);
    }
}

TEST_CASE("hydrodynamic expansion g(z) = z + 2t/z + o(1/z)") {
    ConformalChain c;
    chordal_advance(c, 0.0, 0.5);
    chordal_advance(c, 0.3, 0.5);  // asymmetric drive
    double t = c.total_time();
    cplx z(1000.0, 50.0);
    EvalResult e = evaluate(c, z);
    CHECK(std::abs(e.gz - z - 2.0 * t / z) < 1e-5);

    // Error scaling: err <= C/|z|^2 with the same C at both magnitudes.
    cplx z2(100.0, 5.0);
    double err2 = std::abs(evaluate(c, z2).gz - z2 - 2.0 * t / z2);
    double err3 = std::abs(e.gz - z - 2.0 * t / z);
    CHECK(err2 < 20.0 / std::norm(z2));
    CHECK(err3 < 20.0 / std::norm(z));
}

TEST_CASE("derivative matches central finite differences") {
    DrivingFunction drive = sample_driving(6.0, 200, 1e-3, Seed{401, 0});
    ConformalChain c = chain_from_driving(drive);
    CounterRng rng(Seed{401, 1});
    const double h = 1e-6;
    for (int i = 0; i < 100; ++i) {
        cplx z(4.0 * rng.uniform01() - 2.0, 0.3 + 2.0 * rng.uniform01());
        EvalResult e = evaluate(c, z);
        REQUIRE_FALSE(e.swallowed);
        cplx num = (evaluate(c, z + cplx(h, 0)).gz - evaluate(c, z - cplx(h, 0)).gz) /
                   (2.0 * h);
        CHECK(std::abs(e.dgz - num) < 1e-6 * std::max(1.0, std::abs(e.dgz)));
    }
}

TEST_CASE("half-plane preservation") {
    DrivingFunction drive = sample_driving(6.0, 500, 1e-3, Seed{402, 0});
    ConformalChain c = chain_from_driving(drive);
    CounterRng rng(Seed{402, 1});
    for (int i = 0; i < 50; ++i) {
        cplx z(6.0 * rng.uniform01() - 3.0, 0.05 + 3.0 * rng.uniform01());
        EvalResult e = evaluate(c, z);
        if (!e.swallowed) CHECK(e.gz.imag() > 0.0);
    }
}

TEST_CASE("trace of zero driving is the vertical slit 2i sqrt(t)") {
    DrivingFunction zero;
    zero.dt = 1e-3;
    zero.values.assign(1001, 0.0);
    Path2D tr = chordal_trace(zero, 8);
    for (std::size_t i = 1; i < tr.size(); ++i) {
        double t = tr.times[i];
        cplx expect(0.0, 2.0 * std::sqrt(t));
        CHECK(std::abs(tr.points[i] - expect) <= 0.01 * std::sqrt(t));
    }

    // Constant drive c: same slit translated.
    DrivingFunction cdrive;
    cdrive.dt = 1e-3;
    cdrive.values.assign(501, 1.7);
    Path2D tc = chordal_trace(cdrive, 10);
    for (std::size_t i = 1; i < tc.size(); ++i) {
        cplx expect(1.7, 2.0 * std::sqrt(tc.times[i]));
        CHECK(std::abs(tc.points[i] - expect) <= 0.01 * std::sqrt(tc.times[i]) + 1e-12);
    }
}

TEST_CASE("Brownian scaling of the trace is exact on matched drives") {
    DrivingFunction d1 = sample_driving(6.0, 400, 4e-3, Seed{403, 0});
    const double lambda = 2.0;  // W_{lambda^2 t} / lambda with matched increments
    DrivingFunction d2;
    d2.dt = d1.dt / (lambda * lambda);
    for (double v : d1.values) d2.values.push_back(v / lambda);
    Path2D t1 = chordal_trace(d1, 8);
    Path2D t2 = chordal_trace(d2, 8);
    REQUIRE(t1.size() == t2.size());
    for (std::size_t i = 0; i < t1.size(); ++i)
        CHECK(std::abs(t1.points[i] / lambda - t2.points[i]) < 1e-11);
}

TEST_CASE("inverse round-trip: evaluate(prefix chain, trace point) = W") {
    DrivingFunction drive = sample_driving(6.0, 800, 1e-3, Seed{404, 0});
    // Full-precision handoff: the consistency of the branch choices.
    CHECK(chordal_roundtrip_error(drive, 50) < 1e-8);

    // Public-API path: the double-rounded trace point picks up |g'| times
    // machine epsilon, so the bound is an order looser.
    Path2D tr = chordal_trace(drive, 50);
    for (std::size_t s = 1; s < tr.size(); ++s) {
        std::size_t steps = static_cast<std::size_t>(
            std::llround(tr.times[s] / drive.dt));
        ConformalChain prefix;
        for (std::size_t k = 1; k <= steps; ++k)
            chordal_advance(prefix, drive.values[k], drive.dt);
        EvalResult e = evaluate(prefix, tr.points[s]);
        if (tr.points[s].imag() > 1e-12) {
            REQUIRE_FALSE(e.swallowed);
            CHECK(std::abs(e.gz - cplx(drive.values[steps], 0.0)) < 1e-7);
        }
    }
}

TEST_CASE("boundary point swallowing mirrors the Bessel phases") {
    // kappa = 6: the boundary point is swallowed with probability ~ 0.8 by
    // t = 50 (the hitting time is heavy tailed with index 1/6, so even a
    // long horizon leaves a visible surviving fraction); kappa = 2: never.
    std::size_t swallowed6 = 0, swallowed2 = 0;
    for (std::uint64_t i = 0; i < 60; ++i) {
        DrivingFunction d6 = sample_driving(6.0, 50000, 1e-3, Seed{405, i});
        DrivingFunction d2 = sample_driving(2.0, 50000, 1e-3, Seed{406, i});
        if (evaluate(chain_from_driving(d6), cplx(0.2, 0.0)).swallowed) ++swallowed6;
        if (evaluate(chain_from_driving(d2), cplx(0.2, 0.0)).swallowed) ++swallowed2;
    }
    CHECK(swallowed6 >= 37);
    CHECK(swallowed2 <= 3);
}

TEST_CASE("sle6 swallow experiment: symmetry, monotonicity, Cardy value") {
    auto p_one_side = [](double x, std::size_t trials, double dt) {
        std::size_t one = 0;
        for (std::size_t i = 0; i < trials; ++i) {
            SwallowResult r = sle6_swallow_experiment(x, dt, Seed{407, i});
            CHECK(r.state.u > 0.0);
            if (r.side == SwallowSide::one_side) ++one;
        }
        return static_cast<double>(one) / static_cast<double>(trials);
    };
    const double dt = 1e-4;
    double p50 = p_one_side(0.5, 4000, dt);
    CHECK(std::fabs(p50 - 0.5) < 3.0 * std::sqrt(0.25 / 4000.0));

    double p20 = p_one_side(0.2, 2000, dt);
    double p80 = p_one_side(0.8, 2000, dt);
    CHECK(p20 < p50);
    CHECK(p50 < p80);

    double p25 = p_one_side(0.25, 4000, dt);
    CHECK(std::fabs(p25 - cardy_crossing(0.25)) < 0.03);
}

TEST_CASE("xi_hat synthetic driver recovers lambda exactly") {
    std::vector<double> xs{0.2, 0.5, 0.8, 0.95, 0.985};
    for (double lam : {0.5, 1.0, 2.0}) {
        PowerLawFit f = xi_hat_estimate(lam, xs, 100, 1e-3, Seed{408, 0}, 1, true);
        CHECK(f.slope == doctest::Approx(lam).epsilon(1e-10));
    }
}

TEST_CASE("radial normalization |g_t'(0)| = e^t") {
    RadialChain c;
    c.dt = 1e-3;
    c.thetas.assign(1000, 0.7);  // constant drive
    EvalResult e = radial_evaluate(c, cplx(0.0, 0.0));
    REQUIRE_FALSE(e.swallowed);
    CHECK(std::abs(std::abs(e.dgz) - std::exp(1.0)) < 1e-6);
    CHECK(std::abs(e.gz) < 1e-14);

    // Interior points stay in the disk and move away from 0.
    EvalResult p = radial_evaluate(c, cplx(0.1, -0.2));
    REQUIRE_FALSE(p.swallowed);
    CHECK(std::abs(p.gz) < 1.0);
    CHECK(std::abs(p.gz) > std::abs(cplx(0.1, -0.2)));
}

TEST_CASE("radial trace starts at 1 and reaches the target radius") {
    RadialRunResult run =
        radial_hull_to_radius(6.0, 0.5, 1e-3, Seed{409, 1}, 96, 2000000, 4);
    CHECK(std::abs(run.trace.points.front() - cplx(1.0, 0.0)) < 1e-12);
    double min_mod = 2.0, max_mod = 0.0;
    for (const auto& z : run.trace.points) {
        min_mod = std::min(min_mod, std::abs(z));
        max_mod = std::max(max_mod, std::abs(z));
    }
    CHECK(min_mod <= 0.5);        // touches the inner circle
    CHECK(max_mod >= 1.0 - 0.02); // starts on the unit circle
    CHECK(run.stop_time > 0.0);
    if (run.L.finite) CHECK(run.L.value > 0.0);
}
