#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace frontier {

// Closed-form intersection/disconnection exponent family for planar Brownian
// paths and the SLE6 variants. All functions are pure, reject NaN eagerly,
// and throw ConfigError on domain violations.

// Half-plane exponent, any number of nonnegative arguments:
//   [(sum_i sqrt(24 a_i + 1) - (n-1))^2 - 1] / 24.
double xi_tilde(std::span<const double> a);
double xi_tilde(std::initializer_list<double> a);

// Whole-plane exponent; at least two arguments must be >= 1:
//   [(sum_i sqrt(24 a_i + 1) - n)^2 - 4] / 48.
double xi_plane(std::span<const double> a);
double xi_plane(std::initializer_list<double> a);

// xi(j, lambda) for positive integer j and real lambda >= 0:
//   [(sqrt(24 j + 1) + sqrt(24 lambda + 1) - 2)^2 - 4] / 48.
double xi_j_lambda(int j, double lam);

// Half-plane SLE6 exponent (SLE allowed to bounce off one side):
//   (6 lambda + 1 + sqrt(24 lambda + 1)) / 6.
double xi_hat_sle6(double lam);

// Radial SLE6 exponent (4 lambda + 1 + sqrt(24 lambda + 1)) / 8. The closed
// form is established for lambda >= 1; smaller lambda is returned with the
// extrapolated flag set instead of an error.
struct RadialXi {
    double value;
    bool extrapolated;
};
RadialXi xi_radial_sle6(double lam);

// Two-sided half-plane SLE6 exponent:
//   [(sqrt(24 l1 + 1) + 3 + sqrt(24 l2 + 1))^2 - 1] / 24.
double xi_tilde_sle6_two_sided(double lam1, double lam2);

// The closed-form identity suite: permutation symmetry, both cascade
// relations, the xi(j,lambda)/xi_plane consistency, the four SLE6/Brownian
// identities, the dimension arithmetic and the Cardy symmetry. Each check
// reports its worst error against its tolerance.
struct IdentityCheck {
    std::string name;
    double max_error;
    double tolerance;
    bool pass;
};
std::vector<IdentityCheck> formula_identity_checks();

}  // namespace frontier
