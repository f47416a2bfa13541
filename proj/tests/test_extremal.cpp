#include <cmath>

#include "doctest.h"
#include "frontier/errors.hpp"
#include "frontier/extremal.hpp"

using namespace frontier;

namespace {

// Rectangle quadrilateral on an nx x ny cell grid, sides on the vertical
// edges (or horizontal when flipped).
Quadrilateral rect_quad(int nx, int ny, bool vertical_sides) {
    Quadrilateral q;
    q.blocked = GridMask::empty_window(1.0, 0, 0, nx, ny);
    if (vertical_sides) {
        for (int y = 0; y < ny; ++y) {
            q.side_a.emplace_back(0, y);
            q.side_b.emplace_back(nx - 1, y);
        }
    } else {
        for (int x = 0; x < nx; ++x) {
            q.side_a.emplace_back(x, 0);
            q.side_b.emplace_back(x, ny - 1);
        }
    }
    return q;
}

}  // namespace

TEST_CASE("closed forms") {
    CHECK(annulus_L(std::exp(-2.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(annulus_L(0.1) == doctest::Approx(0.5 * std::log(10.0)).epsilon(1e-14));
    CHECK(annulus_L(0.999) == doctest::Approx(0.5 * std::log(1.0 / 0.999)).epsilon(1e-12));
    CHECK_THROWS_AS(annulus_L(1.5), ConfigError);

    CHECK(rectangle_L(3.7, M_PI) == doctest::Approx(3.7).epsilon(1e-14));
    CHECK(rectangle_L(1, 1) == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(rectangle_L(2, 1) == doctest::Approx(2 * M_PI).epsilon(1e-14));
    CHECK_THROWS_AS(rectangle_L(0.0, 1.0), ConfigError);
}

TEST_CASE("modulus_numeric on a rectangle") {
    ExtremalLength L = modulus_numeric(rect_quad(200, 100, true));
    REQUIRE(L.finite);
    CHECK(L.value == doctest::Approx(2.0 * M_PI).epsilon(0.01));
}

TEST_CASE("modulus_numeric on the annulus") {
    Quadrilateral q = annulus_quadrilateral(0.5, 200);
    ExtremalLength L = modulus_numeric(q);
    REQUIRE(L.finite);
    CHECK(L.value == doctest::Approx(annulus_L(0.5)).epsilon(0.02));
}

TEST_CASE("grid refinement moves the rectangle answer by < 1%") {
    double c = modulus_numeric(rect_quad(120, 60, true)).value;
    double f = modulus_numeric(rect_quad(240, 120, true)).value;
    CHECK(std::fabs(f - c) / f < 0.01);
}

TEST_CASE("reciprocity of rectangle moduli") {
    double v = modulus_numeric(rect_quad(160, 90, true)).value;
    double h = modulus_numeric(rect_quad(160, 90, false)).value;
    CHECK(v * h == doctest::Approx(M_PI * M_PI).epsilon(0.02));
}

TEST_CASE("separated sides give the infinity sentinel") {
    Quadrilateral q = rect_quad(50, 30, true);
    for (int y = 0; y < 30; ++y) q.blocked.set(25, y);  // full wall
    ExtremalLength L = modulus_numeric(q);
    CHECK_FALSE(L.finite);
}

TEST_CASE("enlarging the domain cannot decrease the extremal distance") {
    Quadrilateral holed = rect_quad(120, 60, true);
    for (int y = 20; y < 40; ++y)
        for (int x = 50; x < 70; ++x) holed.blocked.set(x, y);
    double with_hole = modulus_numeric(holed).value;
    double without = modulus_numeric(rect_quad(120, 60, true)).value;
    CHECK(with_hole >= without - 1e-9);
}

TEST_CASE("L_of_x closed form: direction and degeneration") {
    // Increasing in x; -> 0 at 0+ and -> infinity at 1-.
    double prev = 0.0;
    for (double x : {0.05, 0.2, 0.4, 0.5, 0.6, 0.8, 0.95}) {
        double L = L_of_x(x);
        CHECK(L > prev);
        prev = L;
    }
    CHECK(L_of_x(0.5) == doctest::Approx(M_PI).epsilon(1e-12));
    // Degeneration is logarithmic: L ~ pi^2 / (2 ln(4/sqrt(x))) near 0.
    CHECK(L_of_x(1e-6) < L_of_x(1e-3));
    CHECK(L_of_x(1e-12) < 0.4);
    CHECK(L_of_x(1.0 - 1e-6) > 6.0);
    CHECK_THROWS_AS(L_of_x(0.0), ConfigError);

    // K-ratio reciprocity: L(x) * L(1-x) = pi^2 exactly.
    for (double x : {0.1, 0.3, 0.5, 0.8})
        CHECK(L_of_x(x) * L_of_x(1.0 - x) == doctest::Approx(M_PI * M_PI).epsilon(1e-12));

    for (double L : {1.0, 2.0, 4.0, 6.0})
        CHECK(L_of_x(x_of_L(L)) == doctest::Approx(L).epsilon(1e-9));
}

TEST_CASE("L_of_x numeric route agrees with the closed form") {
    // Coarse grid here to keep the suite fast; the 1% check at production
    // resolution runs in the integration suite.
    double num = L_of_x_numeric(0.5, 0.1);
    CHECK(num == doctest::Approx(M_PI).epsilon(0.07));
}
