#pragma once

#include "wpvol/spectral/test_function.hpp"

#include <functional>
#include <vector>

namespace wpvol {

// a0^t = int_{1/4}^inf f(sqrt(r-1/4))^t tanh(pi sqrt(r-1/4)) dr, twice:
// in r directly and after r = 1/4 + rho^2.
struct A0Result {
    unsigned t = 0;
    double rho_route = 0;
    double r_route = 0;
    double rel_diff = 0;
    double cutoff = 0;       // integration stops at rho = cutoff
    double tail_bound = 0;   // analytic bound on the dropped part
    double self_error = 0;
};
// Throws NumericError when the two routes differ by more than rel_tol.
A0Result a0(SpectralContext& ctx, unsigned t, double rel_tol = 1e-8);

// a1^t = sum_k (1/k) int_0^inf 2 sinh(u/2k)^2 / sinh(u/2) F(u) du with F = f0^{*t}.
// The k-sum inside is S(u) = sum_j zeta(2j+1) u^(2j)/(2j)!; the second route
// sums k <= K and brackets the remainder using that sinh(y)/y increases.
struct A1Result {
    unsigned t = 0;
    double value = 0;         // zeta-series kernel
    double k_sum_value = 0;   // truncated k-sum plus bracketed remainder
    double k_tail_width = 0;  // width of that bracket after integration
    double rel_diff = 0;
    double k1_term = 0;       // int_0^inf 2 sinh(u/2) F(u) du
};
A1Result a1(SpectralContext& ctx, unsigned t, double rel_tol = 1e-8, unsigned K = 1000);

// S(u) above.
double sinh_kernel_series(double u);
double sinh_kernel_ksum(double u, unsigned K, double* bracket_width = nullptr);

// nu~1(P) = f(i/2) P(f(i/2)) for P = sum s_j x^j, checked against
// sum_j s_j int_0^inf 2 cosh(r/2) f0^{*(j+1)}(r) dr.
struct NuTildeResult {
    double closed = 0;
    double quadrature = 0;
    double rel_diff = 0;
};
// Throws NumericError beyond rel_tol.
NuTildeResult nu_tilde1(SpectralContext& ctx, const std::vector<double>& s, double rel_tol = 1e-6);

// nu1(x^p) = a1^{p+1}.
double nu1_monomial(SpectralContext& ctx, unsigned p);

// nu0(h~) = int_{1/4}^inf h(f(sqrt(r-1/4))) tanh(pi sqrt(r-1/4)) dr, in rho.
double nu0(SpectralContext& ctx, const std::function<double(double)>& h);

struct SupportRow {
    unsigned p = 0;
    double nu1 = 0, nu_tilde = 0, diff = 0, bound = 0, root = 0;
    bool holds = false;
};
struct SupportReport {
    std::vector<SupportRow> rows;
    unsigned sinh_samples = 0;
    double sinh_worst_margin = 0;   // min of sinh(x/2)/k - sinh(x/2k)^2
    bool sinh_holds = false;
    bool holds = false;
};
// |(nu1 - nu~1)(x^p)| <= (pi^2/6) f(0)^(p+1) for p = 0..p_max (<= 12).
SupportReport support_check(SpectralContext& ctx, unsigned p_max, unsigned seed = 1);

// G_t(l) = sum_k l/(2 sinh(kl/2)) F(kl); R_t keeps k <= ceil(t/(2 asinh 1)).
struct GeodesicKernels {
    unsigned t = 0;
    unsigned k_max = 0;
    std::vector<double> l, G, R;
};
GeodesicKernels geodesic_kernels(SpectralContext& ctx, unsigned t, std::size_t samples = 2000);

}  // namespace wpvol
