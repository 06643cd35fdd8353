#pragma once

#include <functional>

namespace numaxis {

struct QuadratureResult {
    double value;
    double error;
};

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b] to the given
/// absolute tolerance. The integrand is never evaluated at the endpoints.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-12);

}  // namespace numaxis
