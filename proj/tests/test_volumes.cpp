#include "wpvol/errors.hpp"
#include "wpvol/volumes/simple_geodesics.hpp"
#include "wpvol/volumes/splits.hpp"
#include "wpvol/volumes/volumes.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <set>

using namespace wpvol;

namespace {

PiPoly pi2(long num, long den, unsigned j) { return PiPoly::monomial(Rational(num, den), j); }

// All set partitions of {0..n-1} (blocks ordered by smallest label) with every
// genus assignment in [0, g], filtered by the stability and Euler conditions.
std::set<SplitIndex> brute_splits(unsigned g, unsigned g0, unsigned n0) {
    std::set<SplitIndex> out;
    std::vector<unsigned> label(n0, 0);
    std::function<void(unsigned, unsigned)> part = [&](unsigned i, unsigned nb) {
        if (i == n0) {
            std::vector<std::vector<unsigned>> blocks(nb);
            for (unsigned j = 0; j < n0; ++j) blocks[label[j]].push_back(j + 1);
            std::vector<unsigned> gen(nb, 0);
            std::function<void(unsigned)> assign = [&](unsigned b) {
                if (b == nb) {
                    long chi = 0;
                    for (unsigned q = 0; q < nb; ++q) {
                        const long s = 2L * gen[q] + static_cast<long>(blocks[q].size()) - 2;
                        if (s < 1) return;
                        chi += s;
                    }
                    if (chi == 2L * g - 2L * g0 - n0) out.insert(SplitIndex{gen, blocks});
                    return;
                }
                for (unsigned x = 0; x <= g; ++x) {
                    gen[b] = x;
                    assign(b + 1);
                }
            };
            assign(0);
            return;
        }
        for (unsigned b = 0; b <= nb; ++b) {
            label[i] = b;
            part(i + 1, std::max(nb, b + 1));
        }
    };
    part(0, 0);
    return out;
}

}  // namespace

TEST_CASE("closed form volumes") {
    MemoStore s;
    // V_{0,4} = (4 pi^2 + sum x^2) / 2
    VolumePolynomial v04 = volume_polynomial(0, 4, s);
    CHECK(v04.constant_term() == pi2(2, 1, 1));
    CHECK(v04.coefficient({1, 0, 0, 0}) == PiPoly(Rational(1, 2)));
    // V_{1,1} = x^2/48 + pi^2/12
    VolumePolynomial v11 = volume_polynomial(1, 1, s);
    CHECK(v11.coefficient({1}) == PiPoly(Rational(1, 48)));
    CHECK(v11.constant_term() == pi2(1, 12, 1));
    // V_{0,5} = sum x^4/8 + sum_{i<j} x_i^2 x_j^2 / 2 + 3 pi^2 sum x^2 + 10 pi^4
    VolumePolynomial v05 = volume_polynomial(0, 5, s);
    CHECK(v05.coefficient({2, 0, 0, 0, 0}) == PiPoly(Rational(1, 8)));
    CHECK(v05.coefficient({0, 1, 0, 1, 0}) == PiPoly(Rational(1, 2)));
    CHECK(v05.coefficient({1, 0, 0, 0, 0}) == pi2(3, 1, 1));
    CHECK(v05.constant_term() == pi2(10, 1, 2));
    // V_{1,2}(x, y) = (4 pi^2 + x^2 + y^2)(12 pi^2 + x^2 + y^2) / 192
    PiPoly at = volume_at(1, 2, {Rational(1), Rational(2)}, s);
    CHECK(at == PiPoly(std::vector<Rational>{Rational(25, 192), Rational(5, 12), Rational(1, 4)}));
    CHECK(volume(2, 0, s) == pi2(43, 2160, 3));
    CHECK(volume(2, 1, s) == pi2(29, 192, 4));
    CHECK_THROWS_AS(volume_at(1, 1, {Rational(-1)}, s), DomainError);
    CHECK_THROWS_AS(closed_volume(1, s), DomainError);
}

TEST_CASE("ratios") {
    MemoStore s;
    // 4 pi^2 (2g-2+n) V_{g,n} / V_{g,n+1} at (0,3): 4 pi^2 / (2 pi^2) = 2
    CHECK(mz_ratio(0, 3, s).value() == doctest::Approx(2.0));
    CHECK(mz_ratio(2, 0, s).value() == doctest::Approx(1.05441).epsilon(1e-5));
    // V_{1,2}/V_2 = (pi^4/4) / (43 pi^6/2160)
    CHECK(a4_ratio(2, 0, s).value() == doctest::Approx(2160.0 / 4 / 43 / (std::numbers::pi * std::numbers::pi)));
}

TEST_CASE("split enumeration against brute force") {
    for (unsigned g = 2; g <= 5; ++g)
        for (unsigned g0 = 0; g0 < g; ++g0)
            for (unsigned n0 = 1; n0 <= 4; ++n0) {
                if (2 * g0 + n0 < 3 && !(g0 == 0 && n0 == 2)) continue;
                if (2 * g0 + n0 - 2 > 2 * g - 2) continue;
                auto got = enumerate_splits(g, g0, n0);
                std::set<SplitIndex> as_set(got.begin(), got.end());
                CAPTURE(g);
                CAPTURE(g0);
                CAPTURE(n0);
                CHECK(as_set.size() == got.size());
                CHECK(as_set == brute_splits(g, g0, n0));
            }
    CHECK(enumerate_splits(3, 1, 1).size() == 1);
    CHECK(enumerate_splits(3, 0, 2).size() == 3);
}

TEST_CASE("simple geodesic weight") {
    MemoStore s;
    // w at l = 0 equals [V_{g-1,2} + sum V_{i,1} V_{g-i,1}] / V_g at zero lengths
    auto w = simple_weight(3, s);
    ExactQuotient q{volume(2, 2, s) + volume(1, 1, s) * volume(2, 1, s), volume(3, 0, s)};
    CHECK(eval_even_poly(w, 0) == doctest::Approx(q.value()).epsilon(1e-13));
    auto F = [](double l) { return l < 3 ? std::exp(-l) : 0.0; };
    QuadResult lead = simple_leading_integral(F, 3);
    // int_0^3 4 sinh(l/2)^2 e^-l / l dl = int (e^l - 2 + e^-l) e^-l / l; check against a plain midpoint sum
    double ref = 0;
    const int N = 200000;
    for (int i = 0; i < N; ++i) {
        const double l = 3.0 * (i + 0.5) / N;
        ref += 4 * std::sinh(l / 2) * std::sinh(l / 2) / l * std::exp(-l) * 3.0 / N;
    }
    CHECK(lead.value == doctest::Approx(ref).epsilon(1e-9));
}
