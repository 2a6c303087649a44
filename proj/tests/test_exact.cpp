#include "wpvol/errors.hpp"
#include "wpvol/exact/interval.hpp"
#include "wpvol/exact/pi_poly.hpp"
#include "wpvol/exact/rational.hpp"
#include "wpvol/exact/zeta.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wpvol;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2, so only even indices are compared.
Rational bernoulli_at(unsigned n) {
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
    }
    return a[0];
}

}  // namespace

TEST_CASE("bernoulli numbers against Akiyama-Tanigawa") {
    CHECK(bernoulli(1) == Rational(-1, 2));
    for (unsigned n = 0; n <= 40; n += 2) CHECK(bernoulli(n) == bernoulli_at(n));
    for (unsigned n = 3; n <= 41; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("even zeta values") {
    CHECK(zeta_even(1) == PiPoly::monomial(Rational(1, 6), 1));
    CHECK(zeta_even(2) == PiPoly::monomial(Rational(1, 90), 2));
    CHECK(zeta_even(3) == PiPoly::monomial(Rational(1, 945), 3));
    // a_i = (1 - 2^(1-2i)) zeta(2i)
    CHECK(a_rational(0) == Rational(1, 2));
    CHECK(a_rational(1) == Rational(1, 12));
    CHECK(a_rational(2) == Rational(7, 720));
    for (unsigned i = 1; i <= 12; ++i) {
        const double pi2i = std::pow(std::numbers::pi, 2.0 * i);
        double zeta = 0;
        for (int k = 1; k < 200000; ++k) zeta += std::pow(k, -2.0 * i) * (k % 2 ? 1 : -1);
        CHECK(a_rational(i).get_d() * pi2i == doctest::Approx(zeta).epsilon(1e-9));
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK(factorial(10) == 3628800);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(binomial(10, 3) == 120);
}

TEST_CASE("pi polynomial ring and serialization") {
    PiPoly a(std::vector<Rational>{Rational(1), Rational(2)});  // 1 + 2 pi^2
    PiPoly b = PiPoly::monomial(Rational(1, 3), 1);
    PiPoly p = a * b;
    CHECK(p == PiPoly(std::vector<Rational>{Rational(0), Rational(1, 3), Rational(2, 3)}));
    CHECK((p - p).is_zero());
    CHECK(pi_poly_from_json(to_json(p)) == p);
    CHECK(to_pretty(PiPoly(1)) == "1");
    CHECK_THROWS(pi_poly_from_json("[\"1/0\"]"));
}

TEST_CASE("interval enclosures") {
    const double pi = std::numbers::pi;
    Interval ip = pi_interval(200);
    CHECK(ip.mid() == pi);
    CHECK(ip.lo_down() <= pi);
    CHECK(ip.hi_up() >= pi);
    CHECK(ip.width() < 1e-50);
    Interval v = eval_interval(PiPoly::monomial(Rational(43, 2160), 3), 256);
    CHECK(v.contains_zero() == false);
    CHECK(v.mid() == doctest::Approx(43.0 / 2160 * std::pow(pi, 6)).epsilon(1e-14));
    Interval e = Interval(Rational(1), 128).exp();
    CHECK(e.lo_down() <= std::exp(1.0));
    CHECK(e.hi_up() >= std::exp(1.0));
    CHECK(e.width() < 1e-35);
    CHECK_THROWS_AS(Interval(Rational(1), 64) / Interval(Rational(0), 64), NumericError);
    // pi^2 vs 10 needs a few bits, 22/7 pi^0 vs pi differs at the third digit
    CHECK(compare(PiPoly::monomial(Rational(1), 1), PiPoly(10)) == std::strong_ordering::less);
    CHECK(compare(PiPoly(std::vector<Rational>{Rational(0), Rational(1)}), PiPoly(Rational(98696, 10000))) ==
          std::strong_ordering::greater);
}
