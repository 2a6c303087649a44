#include "wpvol/spectral/window.hpp"

#include "wpvol/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

namespace wpvol {

namespace {

// FFTW planning is not thread-safe.
std::mutex fftw_mu;

std::vector<double> redft00(const std::vector<double>& in) {
    const int n = static_cast<int>(in.size());
    std::vector<double> buf(in), out(in.size());
    fftw_plan plan;
    {
        std::lock_guard lock(fftw_mu);
        plan = fftw_plan_r2r_1d(n, buf.data(), out.data(), FFTW_REDFT00, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(fftw_mu);
        fftw_destroy_plan(plan);
    }
    return out;
}

double smooth_step(double y) {
    if (y <= 0) return 0;
    if (y >= 1) return 1;
    const double p = std::exp(-1 / y), q = std::exp(-1 / (1 - y));
    return p / (p + q);
}

double binom(unsigned m, unsigned j) {
    double r = 1;
    for (unsigned i = 1; i <= j; ++i) r = r * (m - j + i) / i;
    return r;
}

}  // namespace

ChebyshevResult chebyshev_coeffs(const std::vector<double>& samples, double alias_tol) {
    if (samples.size() < 3) throw DomainError("chebyshev_coeffs needs at least three samples");
    const std::size_t N = samples.size() - 1;
    ChebyshevResult out;
    std::vector<double> Y = redft00(samples);
    out.a.resize(N + 1);
    for (std::size_t k = 0; k <= N; ++k) out.a[k] = Y[k] / static_cast<double>(N);
    out.a[0] /= 2;
    out.a[N] /= 2;

    std::vector<double> c(out.a);
    c[0] *= 2;
    c[N] *= 2;
    std::vector<double> back = redft00(c);
    double scale = 0;
    for (double s : samples) scale = std::max(scale, std::abs(s));
    for (std::size_t j = 0; j <= N; ++j)
        out.reconstruction_error = std::max(out.reconstruction_error, std::abs(back[j] / 2 - samples[j]));
    if (scale > 0) out.reconstruction_error /= scale;

    double total = 0, top = 0;
    const std::size_t cut = N - N / 10;
    for (std::size_t k = 0; k <= N; ++k) {
        total += out.a[k] * out.a[k];
        if (k > cut) top += out.a[k] * out.a[k];
    }
    out.top_energy = total > 0 ? top / total : 0;
    if (out.top_energy > alias_tol) throw NumericError("chebyshev_coeffs: energy in the top modes, resolution too low");
    return out;
}

double chebyshev_weighted_sum(const std::vector<double>& a, unsigned s) {
    double sum = 0;
    for (std::size_t k = 1; k < a.size(); ++k) sum += std::abs(a[k]) * std::pow(static_cast<double>(k), s);
    return sum;
}

Window::Window(SpectralContext& ctx, double eps, double plateau, double cutoff) : eps_(eps) {
    if (!(plateau > cutoff && cutoff > 0 && plateau < 0.25)) throw DomainError("window needs 0 < cutoff < plateau < 1/4");
    if (!(eps > 0 && eps < 0.25 - plateau)) throw DomainError("window transitions overlap: need 0 < eps < 1/4 - plateau");
    F_ = ctx.f_half();
    x_[0] = ctx.f0_value();
    d_[0] = 0;
    d_[1] = ctx.f_imag_minus_f0(std::sqrt(eps));
    d_[2] = ctx.f_imag_minus_f0(std::sqrt(0.25 - plateau));
    d_[3] = ctx.f_imag_minus_f0(std::sqrt(0.25 - cutoff));
    if (!(d_[1] > 0 && d_[1] < d_[2] && d_[2] < d_[3] && x_[0] + d_[3] < F_))
        throw DomainError("window transitions overlap");
    for (int i = 1; i < 4; ++i) x_[i] = x_[0] + d_[i];
    for (int i = 0; i < 4; ++i) theta_[i] = std::acos(x_[i] / F_);
}

double Window::h_rel(unsigned anchor, double dx) const {
    const double xa = d_[anchor] + dx;                 // x - a
    const double xc = (d_[anchor] - d_[2]) + dx;       // x - c
    const double lo = smooth_step(xa / d_[1]);
    const double hi = 1 - smooth_step(xc / (d_[3] - d_[2]));
    return lo * hi;
}

double Window::h(double x) const { return h_rel(0, x - x_[0]); }

double Window::w_anchor(unsigned anchor, double s) const {
    const double th = theta_[anchor];
    const double dx = -2 * F_ * std::sin(th + s / 2) * std::sin(s / 2);
    const double x = x_[anchor] + dx;
    if (x <= 0) return 0;
    const double hv = h_rel(anchor, dx);
    return hv == 0 ? 0 : hv / x;
}

double Window::w(double theta) const {
    const double x = F_ * std::cos(theta);
    if (x <= 0) return 0;
    const double hv = h(x);
    return hv == 0 ? 0 : hv / x;
}

double Window::derivative_norm(unsigned m) const {
    auto fd = [m](auto&& f, double s, double delta) {
        double acc = 0;
        for (unsigned j = 0; j <= m; ++j) {
            const double sign = (j % 2) ? -1.0 : 1.0;
            acc += sign * binom(m, j) * f(s + (m / 2.0 - j) * delta);
        }
        return acc / std::pow(delta, m);
    };

    double best = 0;
    // transitions: [theta_b, theta_a] anchored at a, [theta_d, theta_c] anchored at c
    struct Span { unsigned anchor; double lo, hi; };
    const Span spans[2] = {{0, theta_[1] - theta_[0], 0.0}, {2, theta_[3] - theta_[2], 0.0}};
    double excl_lo[2], excl_hi[2];
    for (int i = 0; i < 2; ++i) {
        const auto& sp = spans[i];
        const double W = sp.hi - sp.lo;
        const double pad = W / 4;
        const double delta = W / 200;
        const std::size_t M = 4000;
        auto f = [&](double s) { return w_anchor(sp.anchor, s); };
        for (std::size_t j = 0; j <= M; ++j) {
            const double s = sp.lo - pad + (W + 2 * pad) * j / M;
            best = std::max(best, std::abs(fd(f, s, delta)));
        }
        excl_lo[i] = theta_[sp.anchor] + sp.lo - pad;
        excl_hi[i] = theta_[sp.anchor] + sp.hi + pad;
    }
    // elsewhere w is 0 or 1/(F cos theta); a coarse grid away from the transitions
    const double delta = 1e-4;
    const std::size_t M = 20000;
    auto g = [&](double th) { return w(th); };
    for (std::size_t j = 0; j <= M; ++j) {
        const double th = std::numbers::pi * j / M;
        const double reach = (m / 2.0 + 1) * delta;
        bool skip = false;
        for (int i = 0; i < 2; ++i)
            if (th + reach > excl_lo[i] && th - reach < excl_hi[i]) skip = true;
        if (skip) continue;
        best = std::max(best, std::abs(fd(g, th, delta)));
    }
    return best;
}

std::vector<double> Window::derivative_norms(unsigned m_max) const {
    std::vector<double> out;
    for (unsigned m = 0; m <= m_max; ++m) out.push_back(derivative_norm(m));
    return out;
}

double gap_probability_report(double g, double eps, double m, double C) {
    if (!(g > 0 && eps > 0 && m > 0 && C > 0)) throw DomainError("gap_probability_report needs positive inputs");
    return C * std::pow(eps, -m / 2) / g;
}

}  // namespace wpvol
