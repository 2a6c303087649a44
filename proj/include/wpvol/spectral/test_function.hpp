#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace wpvol {

// f0 = g0 * g0 with g0(x) = exp(-1/(1-(x/w)^2)) on (-w, w). Then
// f = f0^ = (g0^)^2 >= 0 on R and f(it) = (int e^{tx} g0)^2 >= 0, and f0 is
// even, non-negative, supported in (-2w, 2w).
struct TestFunction {
    double bump_width = 0.5;
    double h = 0;                // grid spacing shared by g0 and f0
    std::vector<double> g0;      // at -w + j h
    std::vector<double> f0;      // at -2w + j h
    double support() const { return 2 * bump_width; }
    double g0_exact(double x) const;
    double f0_at(double x) const;  // 6-point Lagrange on the grid, 0 outside
    // Trapezoid transform of the f0 samples, independent of the g0^ path.
    double transform_direct(double rho) const;
};

// grid_points = intervals across the support of f0; >= 4096 and divisible by 4.
TestFunction build_test_function(std::size_t grid_points = 4096, double bump_width = 0.5);

// f0^{*t} = g0^{*2t} sampled on [-2wt, 2wt] at the spacing of the test function.
struct ConvolutionPower {
    unsigned t = 0;
    double h = 0;
    double half_width = 0;        // 2wt
    std::vector<double> values;   // at -half_width + j h
    double refinement_diff = 0;   // max |F_h - F_2h| on the coarse nodes, relative to max F
    double at(double x) const;    // 6-point Lagrange, 0 outside the support
    double sup() const;
    // Composite Simpson of phi(x) F(x) over [0, half_width] resp. the whole support.
    double simpson_half(const std::function<double(double)>& phi) const;
    double simpson_full(const std::function<double(double)>& phi) const;
    double mass() const;                   // int F over R
    double positive_moment_cosh() const;   // int_0^inf 2 cosh(r/2) F(r) dr
};

class SpectralContext {
public:
    explicit SpectralContext(TestFunction tf);

    const TestFunction& test_function() const { return tf_; }

    double g0_hat(double rho) const;           // int g0(x) cos(rho x) dx
    double g0_hat_imag(double t) const;        // int g0(x) cosh(t x) dx
    double f(double rho) const { double v = g0_hat(rho); return v * v; }
    double f_imag(double t) const { double v = g0_hat_imag(t); return v * v; }
    // f(it) - f(0) without cancellation.
    double f_imag_minus_f0(double t) const;
    double f0_value() const { return f_zero_; }
    double f_half() const { return f_half_; }

    // Cached; safe to call from several threads.
    const ConvolutionPower& conv_power(unsigned t);

    // ||g0^(m)||_1 for m = 0..mmax by Taylor jets and adaptive quadrature.
    std::vector<double> g0_derivative_l1(unsigned mmax) const;
    // R with int_R^inf 2 rho f(rho)^t d rho <= tol, from |g0^(rho)| <= ||g0^(m)||_1 / rho^m.
    double fourier_cutoff(unsigned t, double tol) const;

private:
    TestFunction tf_;
    std::vector<double> fine_x_, fine_g_;  // trapezoid nodes for g0^, x >= 0
    double fine_h_ = 0;
    double f_zero_ = 0, f_half_ = 0;
    mutable std::vector<double> l1_cache_;
    mutable std::mutex l1_mu_;
    std::mutex conv_mu_;
    std::map<unsigned, std::unique_ptr<ConvolutionPower>> conv_;
    std::vector<std::vector<double>> gpow_;  // g0^{*k} on the base grid
};

}  // namespace wpvol
