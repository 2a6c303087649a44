#include "wpvol/spectral/trace.hpp"

#include "wpvol/errors.hpp"
#include "wpvol/numeric/quadrature.hpp"
#include "wpvol/volumes/simple_geodesics.hpp"

#include <boost/math/special_functions/zeta.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace wpvol {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double>& odd_zeta() {
    static const std::vector<double> z = [] {
        std::vector<double> v(400, 1.0);
        for (unsigned j = 1; j < v.size(); ++j) {
            double s = 2.0 * j + 1;
            v[j] = s < 60 ? boost::math::zeta(s) : 1.0 + std::pow(2.0, -s);
        }
        return v;
    }();
    return z;
}

// unit panels near the origin, then width 4 (the oscillation of g0^ has period about 4 pi)
std::vector<double> rho_breaks(double R) {
    std::vector<double> b;
    double x = 0;
    for (; x < std::min(R, 20.0); x += 1) b.push_back(x);
    for (; x < R; x += 4) b.push_back(x);
    b.push_back(x);
    return b;
}

double rel(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0 ? std::abs(a - b) / scale : 0;
}

}  // namespace

double sinh_kernel_series(double u) {
    if (u == 0) return 0;
    const auto& z = odd_zeta();
    const double u2 = u * u;
    double p = 1, sum = 0;
    for (unsigned j = 1; j < z.size(); ++j) {
        p *= u2 / ((2.0 * j - 1) * (2.0 * j));
        const double term = z[j] * p;
        sum += term;
        if (2.0 * j > u && term < 1e-18 * sum) return sum;
    }
    throw NumericError("sinh kernel series did not converge");
}

double sinh_kernel_ksum(double u, unsigned K, double* bracket_width) {
    double s = 0, inv3 = 0;
    for (unsigned k = 1; k <= K; ++k) {
        const double sh = std::sinh(u / (2.0 * k));
        s += 2.0 / k * sh * sh;
        inv3 += 1.0 / (static_cast<double>(k) * k * k);
    }
    // k > K: (2/k) sinh(u/2k)^2 = u^2/(2k^3) sigma(u/2k)^2, 1 <= sigma <= sigma(u/2K)
    const double tailK = odd_zeta()[1] - inv3;
    const double y = u / (2.0 * K);
    const double sigma = y > 0 ? std::sinh(y) / y : 1.0;
    const double lo = u * u / 2 * tailK;
    const double hi = lo * sigma * sigma;
    if (bracket_width) *bracket_width = hi - lo;
    return s + (lo + hi) / 2;
}

A0Result a0(SpectralContext& ctx, unsigned t, double rel_tol) {
    if (t == 0) throw DomainError("a0 needs t >= 1");
    A0Result out;
    out.t = t;
    out.tail_bound = 1e-12;
    out.cutoff = std::ceil(ctx.fourier_cutoff(t, out.tail_bound));
    const double abs_tol = 1e-15 * std::pow(ctx.f0_value(), t);

    auto rho_integrand = [&](double rho) { return 2 * rho * std::pow(ctx.f(rho), t) * std::tanh(kPi * rho); };
    const std::vector<double> breaks = rho_breaks(out.cutoff);
    QuadResult q1 = integrate_panels(rho_integrand, breaks, abs_tol);

    auto r_integrand = [&](double r) {
        const double rho = std::sqrt(std::max(r - 0.25, 0.0));
        return std::pow(ctx.f(rho), t) * std::tanh(kPi * rho);
    };
    // sqrt behaviour at r = 1/4, so the first panel goes to tanh-sinh
    QuadResult first = integrate_endpoint(r_integrand, 0.25, 1.25);
    std::vector<double> rbreaks;
    for (std::size_t k = 1; k < breaks.size(); ++k) rbreaks.push_back(0.25 + breaks[k] * breaks[k]);
    QuadResult rest = integrate_panels(r_integrand, rbreaks, abs_tol);

    out.rho_route = q1.value;
    out.r_route = first.value + rest.value;
    out.self_error = std::max(q1.self_error, first.self_error + rest.self_error);
    out.rel_diff = rel(out.rho_route, out.r_route);
    if (out.rel_diff > rel_tol) throw NumericError("a0: the r and rho quadratures disagree");
    return out;
}

A1Result a1(SpectralContext& ctx, unsigned t, double rel_tol, unsigned K) {
    if (t == 0) throw DomainError("a1 needs t >= 1");
    const ConvolutionPower& F = ctx.conv_power(t);
    A1Result out;
    out.t = t;
    out.value = F.simpson_half([](double u) { return u == 0 ? 0.0 : sinh_kernel_series(u) / std::sinh(u / 2); });
    out.k_sum_value = F.simpson_half([K](double u) { return u == 0 ? 0.0 : sinh_kernel_ksum(u, K) / std::sinh(u / 2); });
    out.k_tail_width = F.simpson_half([K](double u) {
        if (u == 0) return 0.0;
        double w = 0;
        sinh_kernel_ksum(u, K, &w);
        return w / std::sinh(u / 2);
    });
    out.k1_term = F.simpson_half([](double u) { return 2 * std::sinh(u / 2); });
    out.rel_diff = rel(out.value, out.k_sum_value);
    if (out.rel_diff > rel_tol) throw NumericError("a1: zeta-series and k-sum kernels disagree");
    return out;
}

NuTildeResult nu_tilde1(SpectralContext& ctx, const std::vector<double>& s, double rel_tol) {
    NuTildeResult out;
    const double F = ctx.f_half();
    double p = F;
    for (std::size_t j = 0; j < s.size(); ++j) {
        out.closed += s[j] * p;
        p *= F;
        if (s[j] != 0) out.quadrature += s[j] * ctx.conv_power(static_cast<unsigned>(j + 1)).positive_moment_cosh();
    }
    out.rel_diff = rel(out.closed, out.quadrature);
    if (out.rel_diff > rel_tol) throw NumericError("nu~1: closed form and quadrature disagree");
    return out;
}

double nu1_monomial(SpectralContext& ctx, unsigned p) { return a1(ctx, p + 1).value; }

double nu0(SpectralContext& ctx, const std::function<double(double)>& h) {
    const std::vector<double> breaks = rho_breaks(ctx.fourier_cutoff(1, 1e-12));
    return integrate_panels([&](double rho) { return 2 * rho * h(ctx.f(rho)) * std::tanh(kPi * rho); }, breaks, 1e-14)
        .value;
}

SupportReport support_check(SpectralContext& ctx, unsigned p_max, unsigned seed) {
    if (p_max > 12) throw DomainError("support_check supports p <= 12");
    SupportReport rep;
    rep.holds = true;
    for (unsigned p = 0; p <= p_max; ++p) {
        SupportRow row;
        row.p = p;
        row.nu1 = nu1_monomial(ctx, p);
        row.nu_tilde = std::pow(ctx.f_half(), p + 1);
        row.diff = std::abs(row.nu1 - row.nu_tilde);
        row.bound = kPi * kPi / 6 * std::pow(ctx.f0_value(), p + 1);
        row.root = p > 0 ? std::pow(row.diff, 1.0 / p) : std::numeric_limits<double>::quiet_NaN();
        row.holds = row.diff <= row.bound * (1 + 1e-6);
        rep.holds = rep.holds && row.holds;
        rep.rows.push_back(row);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> X(0, 50);
    std::uniform_int_distribution<int> Kd(2, 100);
    rep.sinh_samples = 10000;
    rep.sinh_worst_margin = std::numeric_limits<double>::infinity();
    rep.sinh_holds = true;
    for (unsigned i = 0; i < rep.sinh_samples; ++i) {
        const double x = X(rng);
        const int k = Kd(rng);
        const double lhs = std::pow(std::sinh(x / (2.0 * k)), 2);
        const double rhs = std::sinh(x / 2) / k;
        if (rhs > 0) rep.sinh_worst_margin = std::min(rep.sinh_worst_margin, 1 - lhs / rhs);
        if (lhs > rhs) rep.sinh_holds = false;
    }
    rep.holds = rep.holds && rep.sinh_holds;
    return rep;
}

GeodesicKernels geodesic_kernels(SpectralContext& ctx, unsigned t, std::size_t samples) {
    const ConvolutionPower& F = ctx.conv_power(t);
    GeodesicKernels out;
    out.t = t;
    const double T = F.half_width;
    out.k_max = static_cast<unsigned>(std::ceil(T / (2 * std::asinh(1.0))));
    for (std::size_t i = 1; i <= samples; ++i) {
        const double l = T * static_cast<double>(i) / samples;
        double G = 0, R = 0;
        for (unsigned k = 1; k * l < T; ++k) {
            const double term = l / (2 * std::sinh(k * l / 2)) * F.at(k * l);
            G += term;
            if (k <= out.k_max) R += term;
        }
        out.l.push_back(l);
        out.G.push_back(G);
        out.R.push_back(R);
    }
    return out;
}

}  // namespace wpvol
