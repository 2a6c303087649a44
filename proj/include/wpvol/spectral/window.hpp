#pragma once

#include "wpvol/spectral/test_function.hpp"

#include <vector>

namespace wpvol {

// Cosine coefficients of w sampled at theta_j = pi j / N, j = 0..N:
// w = sum_k a_k cos(k theta). Raises NumericError on aliasing.
struct ChebyshevResult {
    std::vector<double> a;
    double reconstruction_error = 0;
    double top_energy = 0;  // share of sum a_k^2 in the top tenth of modes
};
ChebyshevResult chebyshev_coeffs(const std::vector<double>& samples, double alias_tol = 1e-6);

// sum_k |a_k| k^s
double chebyshev_weighted_sum(const std::vector<double>& a, unsigned s);

// h = 1 on [f(i sqrt eps), f(i sqrt(1/4 - plateau))], 0 below f(0) and above
// f(i sqrt(1/4 - cutoff)); each transition is its own smooth step.
class Window {
public:
    Window(SpectralContext& ctx, double eps, double plateau = 0.0024, double cutoff = 0.0023);

    double h(double x) const;
    double w(double theta) const;  // h(F cos theta) / (F cos theta), F = f(i/2)
    // Finite-difference estimate of sup |w^(m)| on [0, 2 pi].
    double derivative_norm(unsigned m) const;
    std::vector<double> derivative_norms(unsigned m_max) const;

    double eps() const { return eps_; }
    double a() const { return x_[0]; }
    double b() const { return x_[0] + d_[1]; }
    double c() const { return x_[0] + d_[2]; }
    double d() const { return x_[0] + d_[3]; }

private:
    // h and w at x = X_anchor + dx, dx given without cancellation.
    double h_rel(unsigned anchor, double dx) const;
    double w_anchor(unsigned anchor, double s) const;

    double eps_;
    double F_;
    double x_[4];        // a, b, c, d
    double d_[4];        // X_i - a, computed from g0^ differences
    double theta_[4];    // arccos(X_i / F)
};

// C eps^(-m/2) / g
double gap_probability_report(double g, double eps, double m, double C);

}  // namespace wpvol
