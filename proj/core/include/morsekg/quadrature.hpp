#pragma once

#include <functional>

namespace morsekg {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b].
/// Interval-open rule: endpoints are never evaluated, so integrable
/// endpoint singularities are handled by the subdivision.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double rel_tol = 1e-10,
                                    double abs_tol = 0.0, int max_depth = 48);

}  // namespace morsekg
