#include "wpvol/errors.hpp"
#include "wpvol/intersection/intersection.hpp"
#include "wpvol/intersection/memo_store.hpp"
#include "wpvol/intersection/residuals.hpp"
#include "wpvol/intersection/tau_index.hpp"
#include "wpvol/volumes/volumes.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

using namespace wpvol;
namespace fs = std::filesystem;

namespace {

// Witten-Kontsevich numbers <tau_d> from the DVV form of the Virasoro
// constraints. Genus is fixed by sum d = 3g - 3 + n.
class WK {
public:
    Rational operator()(std::vector<unsigned> d) {
        std::sort(d.begin(), d.end(), std::greater<>());
        const unsigned n = static_cast<unsigned>(d.size());
        unsigned w = 0;
        for (unsigned x : d) w += x;
        if ((w + 3 - n) % 3 != 0 || w + 3 < n) return 0;
        const unsigned g = (w + 3 - n) / 3;
        if (2 * g + n < 3) return 0;
        if (g == 0 && n == 3) return w == 0 ? 1 : 0;
        if (g == 1 && n == 1) return Rational(1, 24);
        auto it = memo_.find(d);
        if (it != memo_.end()) return it->second;
        // d[0] = k + 1 is the distinguished insertion
        const int k = static_cast<int>(d[0]) - 1;
        std::vector<unsigned> rest(d.begin() + 1, d.end());
        Rational s = 0;
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (k < 0 && rest[j] == 0) continue;
            auto e = rest;
            e[j] = static_cast<unsigned>(static_cast<int>(e[j]) + k);
            Rational c(double_factorial(2 * k + 2 * static_cast<int>(rest[j]) + 1),
                       double_factorial(2 * static_cast<int>(rest[j]) - 1));
            c.canonicalize();
            s += c * (*this)(e);
        }
        for (int a = 0; a + 1 <= k; ++a) {
            const int b = k - 1 - a;
            Rational c(double_factorial(2 * a + 1) * double_factorial(2 * b + 1), 2);
            c.canonicalize();
            auto e = rest;
            e.push_back(static_cast<unsigned>(a));
            e.push_back(static_cast<unsigned>(b));
            s += c * (*this)(e);
            const std::size_t m = rest.size();
            for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
                std::vector<unsigned> I{static_cast<unsigned>(a)}, J{static_cast<unsigned>(b)};
                for (std::size_t i = 0; i < m; ++i) (mask >> i & 1 ? I : J).push_back(rest[i]);
                s += c * (*this)(I) * (*this)(J);
            }
        }
        s /= Rational(double_factorial(2 * k + 3));
        memo_[d] = s;
        return s;
    }

private:
    std::map<std::vector<unsigned>, Rational> memo_;
};

}  // namespace

TEST_CASE("tau index validation and keys") {
    CHECK_THROWS_AS(TauIndex(0, {0, 0}), DomainError);
    CHECK_THROWS_AS(TauIndex(1, {}), DomainError);
    TauIndex t(2, {3, 0, 1});
    CHECK(t.dimension() == 6);
    CHECK(t.weight() == 4);
    CHECK(t.pi_degree() == 2);
    CHECK(decode_key(encode_key(2, {3, 1, 0})) == TauIndex(2, {3, 1, 0}));
}

TEST_CASE("base cases and known values") {
    MemoStore s;
    CHECK(intersection_number(TauIndex(0, {0, 0, 0}), s) == PiPoly(1));
    CHECK(intersection_number(TauIndex(1, {1}), s) == PiPoly(Rational(1, 2)));
    CHECK(intersection_number(TauIndex(1, {0}), s) == PiPoly::monomial(Rational(1, 12), 1));
    CHECK(intersection_number(TauIndex(0, {1, 0, 0}), s).is_zero());
    CHECK(intersection_number(TauIndex(0, {0, 0, 0, 0}), s) == PiPoly::monomial(Rational(2), 1));
    CHECK(intersection_number(TauIndex(2, {}), s) == PiPoly::monomial(Rational(43, 2160), 3));
    CHECK(intersection_number(TauIndex(3, {}), s) == PiPoly::monomial(Rational(176557, 1209600), 6));
}

TEST_CASE("top-degree coefficients match Witten-Kontsevich numbers") {
    // coefficient of prod x_i^(2 d_i) in V_{g,n} is <tau_d> / (2^|d| prod d_i!) when |d| = 3g-3+n
    MemoStore s;
    WK wk;
    std::size_t checked = 0;
    for (unsigned g = 0; g <= 3; ++g)
        for (unsigned n = (g == 0 ? 3 : 1); 3 * g + n <= 10; ++n) {
            VolumePolynomial v = volume_polynomial(g, n, s);
            const unsigned D = 3 * g - 3 + n;
            for (const auto& [d, c] : v.terms()) {
                unsigned w = 0;
                Integer den = 1;
                for (unsigned x : d) {
                    w += x;
                    den *= factorial(x);
                }
                if (w != D) continue;
                den <<= w;
                CAPTURE(g);
                CAPTURE(n);
                CHECK(c == PiPoly(wk(d) / Rational(den)));
                ++checked;
            }
        }
    CHECK(checked > 50);
}

TEST_CASE("auxiliary recursions vanish on small indices") {
    MemoStore s;
    CHECK(recursion_iii_residual(1, {0}, s).is_zero());
    CHECK(recursion_iii_residual(2, {}, s).is_zero());
    CHECK(recursion_iii_residual(1, {1, 1}, s).is_zero());
    CHECK(recursion_i_residual(1, {0}, s).is_zero());
    CHECK(recursion_i_residual(0, {0, 0}, s).is_zero());
    CHECK(recursion_ii_residual(1, {0}, 0, s).is_zero());
    CHECK(recursion_ii_residual(0, {}, 0, s).is_zero());
}

TEST_CASE("memo store persistence") {
    const fs::path dir = fs::temp_directory_path() / "wpvol_test_store";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path file = dir / "c.cache";
    MemoStore a;
    const PiPoly v = intersection_number(TauIndex(3, {1, 1}), a);
    a.save(file);

    SUBCASE("round trip") {
        MemoStore b;
        CHECK(b.load(file) == a.size());
        std::vector<std::string> ka, kb;
        a.for_each([&](const std::string& k, const Rational& r) { ka.push_back(k + to_string(r)); });
        b.for_each([&](const std::string& k, const Rational& r) { kb.push_back(k + to_string(r)); });
        CHECK(ka == kb);
        const std::size_t misses = b.misses();
        CHECK(intersection_number(TauIndex(3, {1, 1}), b) == v);
        CHECK(b.misses() == misses);
    }
    SUBCASE("corrupted record is rejected") {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        auto pos = text.find("/", text.find('\n') + 1);
        REQUIRE(pos != std::string::npos);
        text[pos - 1] = text[pos - 1] == '7' ? '8' : '7';
        std::ofstream(file, std::ios::trunc) << text;
        MemoStore b;
        CHECK_THROWS_AS(b.load(file), StorageError);
    }
    SUBCASE("wrong header is rejected") {
        std::ofstream(file, std::ios::trunc) << "SOMETHING ELSE\n";
        MemoStore b;
        CHECK_THROWS_AS(b.load(file), StorageError);
    }
    SUBCASE("aborted save leaves the previous file intact") {
        MemoStore big;
        intersection_number(TauIndex(4, {0, 0}), big);
        big.set_save_abort_after(5);
        CHECK_THROWS(big.save(file));
        MemoStore b;
        CHECK(b.load(file) == a.size());
    }
    SUBCASE("conflicting insert") {
        MemoStore b;
        const std::string k = encode_key(1, {1});
        CHECK(b.insert(k, Rational(1)));
        CHECK_FALSE(b.insert(k, Rational(1)));
        CHECK_THROWS_AS(b.insert(k, Rational(2)), StorageError);
    }
    fs::remove_all(dir);
}
