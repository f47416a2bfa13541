#pragma once

#include <cstddef>

namespace frontier {

// Gamma function via a 9-term Lanczos approximation (reflection for x < 1/2).
// Good to ~14 significant digits away from the poles.
double gamma_fn(double x);

// Gauss hypergeometric 2F1(a,b;c;x) for 0 <= x < 1 (x = 1 allowed when the
// series converges there, i.e. c - a - b > 0). Direct series for x <= 1/2,
// the 1-x linear transformation for x > 1/2 when c - a - b is not an
// integer, otherwise a long direct summation.
double hyp2f1(double a, double b, double c, double x);

// Cardy crossing function C(x) = G(2/3)/(G(1/3)G(4/3)) x^(1/3)
// 2F1(1/3,2/3;4/3;x) on [0,1]; increasing, C(0)=0, C(1)=1.
double cardy_crossing(double x);

// Complete elliptic integral K(k) (modulus convention), via AGM.
double elliptic_K(double k);

// Two-sample Kolmogorov-Smirnov p-value for statistic d with sample sizes
// n1, n2 (asymptotic Kolmogorov distribution).
double ks_pvalue(double d, std::size_t n1, std::size_t n2);

}  // namespace frontier
