#include "wpvol/asymptotics/bounds.hpp"
#include "wpvol/asymptotics/expansion.hpp"
#include "wpvol/asymptotics/fit.hpp"
#include "wpvol/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace wpvol;

namespace {

// A(g) = sum_t a_t/u^t + b/(u^k (u + c)), u = g - base, c >= 0: the remainder
// is bounded by |b|/u^(k+1), so (coeffs, |b|) is a valid expansion of A.
struct RationalFunction {
    int base = 0;
    std::vector<Rational> a;
    Rational b;
    long c = 0;
    Rational operator()(const Rational& g) const {
        const Rational u = g - base;
        Rational s = 0, p = 1;
        for (std::size_t t = 0; t < a.size(); ++t) {
            s += a[t] / p;
            p *= u;
        }
        // p = u^(k+1) now
        return s + b * u / (p * (u + c));
    }
    Expansion expansion(const Rational& gmin) const { return Expansion{base, a, abs(b), gmin}; }
};

Rational rq(std::mt19937_64& r) {
    Rational q(static_cast<long>(r() % 41) - 20, 1 + static_cast<long>(r() % 9));
    q.canonicalize();
    return q;
}

RationalFunction random_fn(std::mt19937_64& r, unsigned k, int base, unsigned zeros = 0) {
    RationalFunction f;
    f.base = base;
    for (unsigned t = 0; t <= k; ++t) f.a.push_back(t < zeros ? Rational(0) : rq(r));
    f.b = rq(r);
    f.c = static_cast<long>(r() % 4);
    return f;
}

bool within(const Expansion& e, const Rational& v, const Rational& g) {
    const Rational u = g - e.base;
    Rational p = 1;
    for (unsigned i = 0; i <= e.order(); ++i) p *= u;
    return abs(v - e.partial_sum(g)) <= e.error / p;
}

}  // namespace

TEST_CASE("product honours its error contract") {
    std::mt19937_64 r(7);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned k = static_cast<unsigned>(r() % 4);
        const Rational gmin(2 + static_cast<long>(r() % 5));
        std::vector<RationalFunction> fs;
        std::vector<Expansion> es;
        unsigned lowest = 99;
        for (int i = 0; i < 3; ++i) {
            fs.push_back(random_fn(r, k + static_cast<unsigned>(r() % 2), 0));
            es.push_back(fs.back().expansion(gmin));
            lowest = std::min(lowest, es.back().order());
        }
        Expansion p = expansion_product(es);
        CHECK(p.order() == lowest);
        for (long j = 0; j < 15; ++j) {
            const Rational g = gmin + Rational(j * j, 3);
            CHECK(within(p, fs[0](g) * fs[1](g) * fs[2](g), g));
        }
    }
}

TEST_CASE("product of exact polynomials") {
    // (1 + 1/u)(1 - 1/u) = 1 - 1/u^2 with zero input error
    Expansion a{0, {Rational(1), Rational(1)}, Rational(0), Rational(2)};
    Expansion b{0, {Rational(1), Rational(-1)}, Rational(0), Rational(2)};
    Expansion p = expansion_product({a, b});
    CHECK(p.coeffs == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(p.error > 0);
    CHECK(p.error <= 1);
}

TEST_CASE("leading-zero product honours its error contract") {
    std::mt19937_64 r(11);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned rz = static_cast<unsigned>(r() % 3), k = 1 + static_cast<unsigned>(r() % 3);
        const unsigned s = k - (r() % 2 ? 1 : 0);
        const Rational gmin(3 + static_cast<long>(r() % 5));
        RationalFunction a1 = random_fn(r, s + rz + 1, 0, rz + 1);
        RationalFunction b = random_fn(r, k, 0), c = random_fn(r, k, 0);
        Expansion p = expansion_product_leading_zeros(a1.expansion(gmin), {b.expansion(gmin), c.expansion(gmin)}, rz, s);
        for (unsigned t = 0; t <= rz; ++t) CHECK(p.coeffs[t] == 0);
        for (long j = 0; j < 15; ++j) {
            const Rational g = gmin + Rational(j * j * j, 7);
            CHECK(within(p, a1(g) * b(g) * c(g), g));
        }
    }
}

TEST_CASE("base shift") {
    SUBCASE("symbolic geometric series") {
        // 1/(g-m) = sum_{t>=1} m^(t-1)/g^t
        for (long m = -3; m <= 3; ++m) {
            std::vector<Rational> a(7, Rational(0));
            a[1] = 1;
            auto b = shift_coefficients(a, m);
            Rational p = 1;
            for (unsigned t = 1; t < 7; ++t, p *= m) CHECK(b[t] == p);
        }
    }
    SUBCASE("round trip") {
        std::mt19937_64 r(3);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> a;
            for (int t = 0; t < 9; ++t) a.push_back(rq(r));
            const long m = 1 + static_cast<long>(r() % 5);
            CHECK(shift_coefficients(shift_coefficients(a, m), -m) == a);
        }
    }
    SUBCASE("error contract") {
        std::mt19937_64 r(5);
        for (int trial = 0; trial < 40; ++trial) {
            const unsigned k = static_cast<unsigned>(r() % 3);
            const unsigned m = 1 + static_cast<unsigned>(r() % (k + 1));
            const Rational gmin((k + 1) * (k + 1) * (k + 1) + m + static_cast<unsigned>(r() % 4));
            RationalFunction f = random_fn(r, k, static_cast<int>(m));
            Expansion out = shift_base(f.expansion(gmin), m);
            CHECK(out.base == 0);
            for (long j = 0; j < 15; ++j) {
                const Rational g = gmin + Rational(j * j, 2);
                CHECK(within(out, f(g), g));
            }
        }
    }
    SUBCASE("hypotheses") {
        Expansion e{2, {Rational(1), Rational(1)}, Rational(1), Rational(8)};
        CHECK_THROWS_AS(shift_base(e, 3), DomainError);  // base mismatch
        Expansion low{2, {Rational(1), Rational(1)}, Rational(1), Rational(4)};
        CHECK_THROWS_AS(shift_base(low, 2), DomainError);  // (k+1)^3 > g_min
        Expansion id{0, {Rational(1)}, Rational(1), Rational(2)};
        CHECK(shift_base(id, 0).coeffs == id.coeffs);
    }
}

TEST_CASE("tail zeta bound") {
    TailZetaBound t0 = tail_zeta_bound(0);
    const double pi = std::numbers::pi;
    CHECK(t0.partial_lo <= 1 - pi * pi / 12 + 1e-15);
    CHECK(t0.partial_hi >= 1 - pi * pi / 12 - 1e-15);
    CHECK(t0.holds);
    // sum_i (a_{i+1} - a_i) i = sum_{i>=1} (1 - a_i) by summation by parts, a_i -> 1
    double s = 0;
    s += 1 - pi * pi / 12 + 1 - 7 * std::pow(pi, 4) / 720;
    for (int i = 3; i < 200; ++i) {
        double eta = 0;
        for (int k = 2000; k >= 1; --k) eta += (k % 2 ? 1 : -1) * std::pow(k, -2.0 * i);
        s += 1 - eta;
    }
    CHECK(tail_zeta_bound(1).partial_hi == doctest::Approx(s).epsilon(1e-9));
    for (unsigned r = 0; r <= 20; ++r) CHECK(tail_zeta_bound(r).holds);
}

TEST_CASE("coefficient product bound") {
    auto b = coeff_product_bound({1, 1}, 2, 2);
    CHECK(b.lhs == 16);
    CHECK(b.rhs == 1296);
    auto c = coeff_product_bound({2}, 2, 2);  // 2*4^2 + 4^4 vs 6^4
    CHECK(c.lhs == 288);
    CHECK(c.rhs == 1296);
    CHECK_THROWS_AS(coeff_product_bound({1}, 1, 2), DomainError);
    CHECK_THROWS_AS(coeff_product_bound({0}, 2, 2), DomainError);
}

TEST_CASE("least squares fit") {
    std::vector<std::pair<double, double>> s;
    for (int g = 5; g <= 12; ++g) s.push_back({double(g), 1 + 2.0 / g});
    FitReport f = fit_expansion(s, 1);
    CHECK(f.coeffs[0] == doctest::Approx(1).epsilon(1e-12));
    CHECK(f.coeffs[1] == doctest::Approx(2).epsilon(1e-12));
    CHECK(f.warning.empty());
    CHECK_THROWS_AS(fit_expansion({{5, 1}, {6, 1}, {7, 1}}, 1), DomainError);

    EnvelopeCheck e = envelope_check(s, 1.0);
    CHECK(e.spread == doctest::Approx(1.0));
    CHECK(e.holds);
    std::vector<std::pair<double, double>> bad{{5, 1.1}, {6, 1.0001}, {7, 1.1}};
    CHECK_FALSE(envelope_check(bad, 1.0).holds);
}
