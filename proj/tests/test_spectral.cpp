#include "wpvol/errors.hpp"
#include "wpvol/spectral/test_function.hpp"
#include "wpvol/spectral/trace.hpp"
#include "wpvol/spectral/window.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace wpvol;

namespace {

SpectralContext& shared() {
    static SpectralContext ctx(build_test_function());
    return ctx;
}

double bump(double x) {
    const double y = 2 * x;
    return std::abs(y) < 1 ? std::exp(-1 / (1 - y * y)) : 0.0;
}

// Composite Simpson for int_{-1/2}^{1/2} g0(x) cos(rho x) dx.
double g0_hat_simpson(double rho, int n = 4000) {
    const double h = 1.0 / n;
    double s = 0;
    for (int i = 0; i <= n; ++i) {
        const double x = -0.5 + i * h;
        const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
        s += w * bump(x) * std::cos(rho * x);
    }
    return s * h / 3;
}

}  // namespace

TEST_CASE("test function transform") {
    auto& ctx = shared();
    for (double rho : {0.0, 0.3, 1.0, 7.5, 20.0, 44.0}) {
        CAPTURE(rho);
        CHECK(ctx.g0_hat(rho) == doctest::Approx(g0_hat_simpson(rho)).epsilon(1e-11).scale(1e-14));
        CHECK(ctx.test_function().transform_direct(rho) == doctest::Approx(ctx.f(rho)).epsilon(1e-9).scale(1e-13));
    }
    const double m = g0_hat_simpson(0);
    CHECK(ctx.f0_value() == doctest::Approx(m * m).epsilon(1e-12));
    CHECK(ctx.f0_value() == doctest::Approx(0.0492826271988735).epsilon(1e-12));
    // int g0(x) cosh(x/2)
    double s = 0;
    const int n = 4000;
    for (int i = 0; i <= n; ++i) {
        const double x = -0.5 + double(i) / n;
        s += ((i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2)) * bump(x) * std::cosh(x / 2);
    }
    s /= 3.0 * n;
    CHECK(ctx.f_half() == doctest::Approx(s * s).epsilon(1e-12));
    CHECK(ctx.f_imag_minus_f0(0.5) == doctest::Approx(ctx.f_half() - ctx.f0_value()).epsilon(1e-9));
    CHECK_THROWS_AS(build_test_function(100), DomainError);
}

TEST_CASE("convolution powers") {
    auto& ctx = shared();
    const auto& tf = ctx.test_function();
    const ConvolutionPower& one = ctx.conv_power(1);
    CHECK(one.half_width == doctest::Approx(1.0));
    for (double x : {0.0, 0.13, -0.5, 0.77}) CHECK(one.at(x) == doctest::Approx(tf.f0_at(x)).epsilon(1e-12).scale(1e-16));
    for (unsigned t = 1; t <= 4; ++t) {
        const double mass = ctx.conv_power(t).mass();
        CHECK(mass == doctest::Approx(std::pow(ctx.f0_value(), t)).epsilon(1e-10));
        CHECK(ctx.conv_power(t).refinement_diff < 1e-9);
    }
    // f0 * f0 at 0 equals int f0^2
    double s = 0;
    for (std::size_t j = 0; j < tf.f0.size(); ++j) s += tf.f0[j] * tf.f0[j];
    CHECK(ctx.conv_power(2).at(0) == doctest::Approx(s * tf.h).epsilon(1e-10));
}

TEST_CASE("a0 against a direct rho integral") {
    // t = 2: int_0^R 2 rho f(rho)^2 tanh(pi rho) d rho, f from the Simpson transform
    const double R = 90, h = 0.005;
    const int n = static_cast<int>(R / h);
    double s = 0;
    for (int i = 0; i <= n; ++i) {
        const double rho = i * h;
        const double g = g0_hat_simpson(rho);
        const double f = g * g;
        s += ((i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2)) * 2 * rho * f * f * std::tanh(std::numbers::pi * rho);
    }
    s *= h / 3;
    A0Result a = a0(shared(), 2);
    CHECK(a.rho_route == doctest::Approx(s).epsilon(1e-8));
    CHECK(a.rho_route == doctest::Approx(0.0282728359736639).epsilon(1e-10));
    CHECK(a.rel_diff < 1e-8);
}

TEST_CASE("a1 kernel") {
    double width = 0;
    for (double u : {0.01, 0.5, 1.0, 2.0, 3.9}) {
        CAPTURE(u);
        const double ks = sinh_kernel_ksum(u, 1000, &width);
        CHECK(sinh_kernel_series(u) == doctest::Approx(ks).epsilon(1e-10));
        CHECK(width < 1e-5);
    }
    A1Result a = a1(shared(), 1);
    CHECK(a.rel_diff < 1e-8);
    CHECK(a.k1_term < a.value);
    CHECK(a.value == doctest::Approx(0.00680526490547942).epsilon(1e-9));
}

TEST_CASE("nu tilde and support bound") {
    auto& ctx = shared();
    for (unsigned j = 0; j <= 3; ++j) {
        std::vector<double> s(j + 1, 0.0);
        s[j] = 1;
        auto r = nu_tilde1(ctx, s);
        CHECK(r.closed == doctest::Approx(std::pow(ctx.f_half(), j + 1)).epsilon(1e-14));
        CHECK(r.rel_diff < 1e-6);
    }
    CHECK_THROWS_AS(support_check(ctx, 13), DomainError);
}

TEST_CASE("chebyshev coefficients") {
    std::mt19937_64 r(9);
    std::uniform_real_distribution<double> u(-1, 1);
    const std::size_t N = 256;
    std::vector<double> c(20);
    for (auto& x : c) x = u(r);
    std::vector<double> samples(N + 1);
    for (std::size_t j = 0; j <= N; ++j) {
        const double th = std::numbers::pi * j / N;
        double s = 0;
        for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * std::cos(k * th);
        samples[j] = s;
    }
    ChebyshevResult res = chebyshev_coeffs(samples);
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(res.a[k] == doctest::Approx(c[k]).epsilon(1e-12).scale(1e-13));
    CHECK(res.reconstruction_error < 1e-12);
    CHECK(chebyshev_weighted_sum({7, 1, 1}, 2) == doctest::Approx(1 + 4));  // a_0 carries no weight
    // white noise puts energy in the top modes
    for (auto& x : samples) x = u(r);
    CHECK_THROWS_AS(chebyshev_coeffs(samples), NumericError);
}

TEST_CASE("window") {
    auto& ctx = shared();
    Window w(ctx, 1e-3);
    CHECK(w.a() < w.b());
    CHECK(w.b() < w.c());
    CHECK(w.c() < w.d());
    CHECK(w.h(0.5 * (w.b() + w.c())) == doctest::Approx(1.0));
    CHECK(w.h(w.a() - 1e-6) == 0.0);
    CHECK(w.h(w.d() + 1e-6) == 0.0);
    Window w4(ctx, 2.5e-4);
    CHECK(w4.derivative_norm(1) / w.derivative_norm(1) == doctest::Approx(4).epsilon(0.01));
    CHECK(w4.derivative_norm(0) == doctest::Approx(w.derivative_norm(0)).epsilon(0.01));
    CHECK(gap_probability_report(10, 0.01, 2, 1) == doctest::Approx(10.0));
}
