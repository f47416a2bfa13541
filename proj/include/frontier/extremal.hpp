#pragma once

#include <utility>
#include <vector>

#include "frontier/grid.hpp"

namespace frontier {

// pi times an extremal distance. The infinite case (sides separated in the
// domain) is an explicit tag, never an IEEE infinity inside arithmetic.
struct ExtremalLength {
    bool finite = true;
    double value = 0.0;

    static ExtremalLength infinite() { return {false, 0.0}; }
};

// pi x modulus of the annulus r < |z| < 1: (1/2) ln(1/r).
double annulus_L(double r);

// pi x extremal distance between the vertical edges of a width x height
// rectangle: pi * width / height.
double rectangle_L(double width, double height);

// Discretized quadrilateral: set bits of `blocked` are obstacles, free cells
// form the domain; the sides are free cells on the domain boundary.
struct Quadrilateral {
    GridMask blocked;
    std::vector<std::pair<int, int>> side_a;
    std::vector<std::pair<int, int>> side_b;
};

// pi x extremal distance between side_a and side_b: solves the mixed
// Dirichlet/Neumann Laplace problem (u = 0 on side_a, u = 1 on side_b,
// insulating elsewhere) by conjugate gradients to the given relative
// residual and returns pi / (Dirichlet energy of u).
ExtremalLength modulus_numeric(const Quadrilateral& q, double tol = 1e-8);

// Annulus r < |z| < 1 discretized with cells_across cells per unit length;
// side_a hugs the inner circle, side_b the outer one. Extra obstacles can be
// stamped into .blocked afterwards.
Quadrilateral annulus_quadrilateral(double r, int cells_per_unit);

// The L with [0,L]x[0,pi] conformally equivalent to the half-plane
// quadrilateral marked at (0, x, 1, infinity), i.e. pi times the extremal
// distance between [x,1] and (-inf,0]. Closed form pi K(sqrt(x)) /
// K(sqrt(1-x)); increasing, L -> 0 as x -> 0+ and L -> inf as x -> 1-.
double L_of_x(double x);

// Same quantity from the discretized truncated half-plane (Neumann far
// boundary at 20x the marked-segment span); cross-validates the closed form.
double L_of_x_numeric(double x, double cell = 0.025);

// Inverse of L_of_x by bisection.
double x_of_L(double L);

}  // namespace frontier
