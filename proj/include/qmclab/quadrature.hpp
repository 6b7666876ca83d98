#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qmclab {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
    long panels = 0;
};

/// Composite adaptive Gauss-Legendre (15-point) integration of f over
/// [a, b]. The interval is first split at the interior `breakpoints`
/// (intended for known kinks, jumps, or oscillation nodes), then each panel
/// is subdivided dyadically until two refinement levels agree to its share
/// of `tol`. Non-convergence is reported through the result, not thrown.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    std::span<const double> breakpoints = {},
                                    int max_depth = 40);

/// Cumulative integrals G(q) = integral of f over [a, q] for every query
/// point, in one left-to-right pass (each inter-query segment is integrated
/// once). `queries` must be sorted and >= a. Shares the panel and
/// subdivision machinery with integrate_adaptive.
std::vector<double> cumulative_integrals(const std::function<double(double)>& f,
                                         double a,
                                         std::span<const double> queries,
                                         double tol,
                                         std::span<const double> breakpoints = {});

}  // namespace qmclab
