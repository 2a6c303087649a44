#pragma once

#include <functional>
#include <vector>

namespace wpvol {

struct QuadResult {
    double value = 0;
    double error = 0;       // estimate reported by the adaptive rule
    double self_error = 0;  // |value - value on halved panels|
};

// Adaptive 61-point Gauss-Kronrod on [a,b], then again on the two halves
// (twice the nodes) as a refinement check. Throws NumericError when either
// estimate exceeds max(abs_tol, rel_tol * |value|) by more than a factor 100.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-10,
                     double rel_tol = 1e-13);

// Sum of integrate() over consecutive panels [x_0,x_1], [x_1,x_2], ...
QuadResult integrate_panels(const std::function<double(double)>& f, const std::vector<double>& breaks,
                            double abs_tol = 1e-10, double rel_tol = 1e-13);

// Tanh-sinh on [a,b]; for integrands with endpoint singularities.
QuadResult integrate_endpoint(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-13);

}  // namespace wpvol
