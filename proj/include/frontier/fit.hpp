#pragma once

#include <cstddef>
#include <vector>

namespace frontier {

// One measured point of a power-law experiment.
struct FitPoint {
    double scale = 0.0;        // abscissa (radius R, walk size n, exp(L), ...)
    double value = 0.0;        // measured positive value
    double sigma_log = 0.0;    // stderr of log(value); 0 means unknown
    std::size_t n_samples = 0; // trials behind the value
    bool used = true;          // excluded points are reported but not fitted
};

// Result of the log-log regression. Sign convention: decay exponents are
// positive, i.e. value ~ scale^(-slope).
struct PowerLawFit {
    double slope = 0.0;
    double std_error = 0.0;
    double intercept = 0.0;  // log value at log scale = 0
    double r_squared = 0.0;
    std::vector<FitPoint> points;
};

// Weighted least squares of log(value) on log(scale). Weights are the
// inverse variances of log(value) when sigma_log is supplied on every used
// point; otherwise ordinary least squares with a residual-based error bar.
// Throws ConfigError when fewer than 3 usable points remain or any used
// value is nonpositive.
PowerLawFit fit_power_law(std::vector<FitPoint> points);

}  // namespace frontier
