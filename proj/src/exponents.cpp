#include "frontier/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "frontier/errors.hpp"
#include "frontier/rng.hpp"
#include "frontier/special.hpp"

namespace frontier {

namespace {

void check_weights(std::span<const double> a) {
    if (a.empty()) throw ConfigError("exponent arguments: empty list");
    for (double v : a) {
        if (std::isnan(v)) throw ConfigError("exponent arguments: NaN entry");
        if (v < 0.0)
            throw ConfigError("exponent arguments: negative entry " + std::to_string(v));
    }
}

// Summed in sorted order so the symmetric functions are permutation
// invariant bit for bit, not just to rounding.
double sqrt_sum(std::span<const double> a) {
    std::vector<double> sorted(a.begin(), a.end());
    std::sort(sorted.begin(), sorted.end());
    double s = 0.0;
    for (double v : sorted) s += std::sqrt(24.0 * v + 1.0);
    return s;
}

}  // namespace

double xi_tilde(std::span<const double> a) {
    check_weights(a);
    double s = sqrt_sum(a) - (static_cast<double>(a.size()) - 1.0);
    return (s * s - 1.0) / 24.0;
}

double xi_tilde(std::initializer_list<double> a) {
    std::vector<double> v(a);
    return xi_tilde(std::span<const double>(v));
}

double xi_plane(std::span<const double> a) {
    check_weights(a);
    int at_least_one = 0;
    for (double v : a)
        if (v >= 1.0) ++at_least_one;
    if (at_least_one < 2)
        throw ConfigError("xi_plane: needs at least two arguments >= 1");
    double s = sqrt_sum(a) - static_cast<double>(a.size());
    return (s * s - 4.0) / 48.0;
}

double xi_plane(std::initializer_list<double> a) {
    std::vector<double> v(a);
    return xi_plane(std::span<const double>(v));
}

double xi_j_lambda(int j, double lam) {
    if (j < 1) throw ConfigError("xi_j_lambda: j must be a positive integer");
    if (std::isnan(lam) || lam < 0.0) throw ConfigError("xi_j_lambda: lambda must be >= 0");
    double s = std::sqrt(24.0 * j + 1.0) + std::sqrt(24.0 * lam + 1.0) - 2.0;
    return (s * s - 4.0) / 48.0;
}

double xi_hat_sle6(double lam) {
    if (std::isnan(lam) || lam < 0.0) throw ConfigError("xi_hat_sle6: lambda must be >= 0");
    return (6.0 * lam + 1.0 + std::sqrt(24.0 * lam + 1.0)) / 6.0;
}

RadialXi xi_radial_sle6(double lam) {
    if (std::isnan(lam) || lam < 0.0)
        throw ConfigError("xi_radial_sle6: lambda must be >= 0");
    double v = (4.0 * lam + 1.0 + std::sqrt(24.0 * lam + 1.0)) / 8.0;
    return RadialXi{v, lam < 1.0};
}

double xi_tilde_sle6_two_sided(double lam1, double lam2) {
    if (std::isnan(lam1) || std::isnan(lam2) || lam1 < 0.0 || lam2 < 0.0)
        throw ConfigError("xi_tilde_sle6_two_sided: lambdas must be >= 0");
    double s = std::sqrt(24.0 * lam1 + 1.0) + 3.0 + std::sqrt(24.0 * lam2 + 1.0);
    return (s * s - 1.0) / 24.0;
}

std::vector<IdentityCheck> formula_identity_checks() {
    std::vector<IdentityCheck> out;
    auto add = [&](const std::string& name, double err, double tol) {
        out.push_back(IdentityCheck{name, err, tol, err <= tol});
    };
    CounterRng rng(Seed{0xF0F0F0F0ull, 0});

    double err = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> a;
        int n = 2 + static_cast<int>(rng.next_u64() % 4);
        for (int i = 0; i < n; ++i) a.push_back(5.0 * rng.uniform01());
        a[0] += 1.0;
        a[1] += 1.0;
        double t0 = xi_tilde(a), p0 = xi_plane(a);
        for (std::size_t i = a.size(); i > 1; --i)
            std::swap(a[i - 1], a[rng.next_u64() % i]);
        err = std::max(err, std::fabs(xi_tilde(a) - t0));
        err = std::max(err, std::fabs(xi_plane(a) - p0));
    }
    add("permutation symmetry", err, 1e-14);

    err = 0.0;
    for (int rep = 0; rep < 400; ++rep) {
        double a1 = 4.0 * rng.uniform01(), a2 = 4.0 * rng.uniform01();
        double a3 = 4.0 * rng.uniform01(), a4 = 4.0 * rng.uniform01();
        err = std::max(err, std::fabs(xi_tilde({a1, a2, a3, a4}) -
                                      xi_tilde({a1, a2, xi_tilde({a3, a4})})));
    }
    add("cascade relation (half-plane)", err, 1e-12);

    err = 0.0;
    for (int rep = 0; rep < 400; ++rep) {
        double a1 = 1.0 + 4.0 * rng.uniform01(), a2 = 1.0 + 4.0 * rng.uniform01();
        double a3 = 4.0 * rng.uniform01(), a4 = 4.0 * rng.uniform01();
        err = std::max(err, std::fabs(xi_plane({a1, a2, a3, a4}) -
                                      xi_plane({a1, a2, xi_tilde({a3, a4})})));
        err = std::max(err,
                       std::fabs(xi_plane({a1, a2, a3}) -
                                 xi_plane({a1, a2, xi_tilde({a3})})));
    }
    add("cascade relation (plane)", err, 1e-12);

    err = 0.0;
    for (int j = 1; j <= 4; ++j)
        for (int i = 0; i <= 40; ++i) {
            double lam = 1.0 + 4.0 * i / 40.0;
            err = std::max(err, std::fabs(xi_j_lambda(j, lam) -
                                          xi_plane({static_cast<double>(j), lam})));
        }
    add("xi(j,lambda) vs plane formula (lambda >= 1)", err, 1e-14);

    double e1 = 0, e2 = 0, e3 = 0, e4 = 0;
    for (int i = 0; i <= 100; ++i) {
        double lam = 5.0 * i / 100.0;
        e1 = std::max(e1, std::fabs(xi_hat_sle6(lam) - xi_tilde({1.0 / 3.0, lam})));
        e2 = std::max(e2, std::fabs(xi_tilde({1.0, lam}) -
                                    xi_hat_sle6(xi_hat_sle6(lam))));
        if (lam >= 1.0)
            e3 = std::max(e3, std::fabs(xi_radial_sle6(lam).value -
                                        xi_j_lambda(1, lam)));
        for (int k = 0; k <= 5; ++k)
            e4 = std::max(e4, std::fabs(xi_tilde_sle6_two_sided(lam, k) -
                                        xi_tilde({lam, 1.0, static_cast<double>(k)})));
    }
    add("xi_hat(SLE6,.) = xi~(1/3,.)", e1, 1e-12);
    add("xi~(1,.) = xi_hat(xi_hat(.))", e2, 1e-12);
    add("radial xi(SLE6,.) = xi(1,.) for lambda >= 1", e3, 1e-12);
    add("two-sided xi~(.,SLE6,.) = xi~(.,1,.)", e4, 1e-12);

    err = std::fabs(2.0 - xi_j_lambda(2, 0.0) - 4.0 / 3.0);
    err = std::max(err, std::fabs(2.0 - xi_j_lambda(1, 1.0) - 3.0 / 4.0));
    err = std::max(err, std::fabs(2.0 - xi_j_lambda(1, 0.0) - 7.0 / 4.0));
    add("dimension arithmetic 4/3, 3/4, 7/4", err, 1e-15);

    err = 0.0;
    double mono = 0.0, prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        double x = i / 100.0;
        double c = cardy_crossing(x);
        if (i >= 1 && i <= 99)
            err = std::max(err, std::fabs(c + cardy_crossing(1.0 - x) - 1.0));
        if (c <= prev) mono = 1.0;
        prev = c;
    }
    add("Cardy symmetry C(x) + C(1-x) = 1", err, 1e-10);
    add("Cardy strictly increasing", mono, 0.5);
    return out;
}

}  // namespace frontier
