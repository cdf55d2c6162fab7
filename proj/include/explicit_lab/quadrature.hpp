#pragma once

#include <cstddef>
#include <functional>

namespace explicit_lab::quadrature {

struct Result {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    std::size_t intervals = 0;
};

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    std::size_t max_intervals = 4000;
};

// Globally adaptive 15-point Gauss-Kronrod integration on a finite interval.
// The interval with the largest error estimate is bisected until the summed
// estimate meets max(abs_tol, rel_tol*|value|). Throws AccuracyError when
// max_intervals is exhausted first.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

// Single G7/K15 panel; exposed for tests of the rule itself.
Result gauss_kronrod_15(const std::function<double(double)>& f, double a, double b);

}  // namespace explicit_lab::quadrature
