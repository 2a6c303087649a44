#include "wpvol/cli/suites.hpp"

#include "wpvol/asymptotics/bounds.hpp"
#include "wpvol/asymptotics/expansion.hpp"
#include "wpvol/asymptotics/fit.hpp"
#include "wpvol/cli/worker_pool.hpp"
#include "wpvol/errors.hpp"
#include "wpvol/exact/interval.hpp"
#include "wpvol/intersection/intersection.hpp"
#include "wpvol/intersection/residuals.hpp"
#include "wpvol/intersection/tau_index.hpp"
#include "wpvol/spectral/trace.hpp"
#include "wpvol/spectral/window.hpp"
#include "wpvol/volumes/simple_geodesics.hpp"
#include "wpvol/volumes/volumes.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

namespace wpvol {

namespace {

using json = nlohmann::json;

// Sorted-descending multisets of size n with sum <= max_sum.
void for_each_multiset(unsigned n, unsigned max_sum, const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> d(n);
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned i, unsigned cap, unsigned left) {
        if (i == n) {
            fn(d);
            return;
        }
        for (unsigned v = 0; v <= std::min(cap, left); ++v) {
            d[i] = v;
            rec(i + 1, v, left - v);
        }
    };
    rec(0, max_sum, max_sum);
}

struct GN {
    unsigned g, n;
};

// Stable (g,n) with 3g-3+n <= K; n = 0 only for g >= 2.
std::vector<GN> stable_pairs(unsigned K) {
    std::vector<GN> out;
    for (unsigned g = 0; 3 * g <= K + 3; ++g)
        for (unsigned n = 0; 3 * g + n <= K + 3; ++n)
            if (is_stable(g, n)) out.push_back({g, n});
    return out;
}

int dim(unsigned g, unsigned n) { return 3 * static_cast<int>(g) - 3 + static_cast<int>(n); }

Check envelope_check_named(const std::string& name, const std::vector<std::pair<double, double>>& samples,
                           double target, double factor = 3) {
    EnvelopeCheck e = envelope_check(samples, target, factor);
    Check c;
    c.name = name;
    c.pass = e.holds;
    c.measured = {{"spread", e.spread}, {"scaled", e.scaled}};
    c.envelope = {{"max_over_min", factor}};
    c.margin = (factor - e.spread) / factor;
    return c;
}

// ---------------------------------------------------------------- recursions

Report suite_recursions(const Config& cfg, const SuiteOptions& opt, MemoStore& store) {
    Report rep;
    rep.suite = "recursions";
    const unsigned K = opt.max_complexity;
    std::atomic<std::size_t> n3{0}, n1{0}, n2{0}, bad3{0}, bad1{0}, bad2{0};
    std::mutex mu;
    std::vector<std::string> failures;
    auto note = [&](const std::string& s) {
        std::lock_guard lock(mu);
        if (failures.size() < 20) failures.push_back(s);
    };
    auto label = [](const char* r, unsigned g, const std::vector<unsigned>& d, int l = -1) {
        std::ostringstream os;
        os << r << " g=" << g << " d=[";
        for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
        os << "]";
        if (l >= 0) os << " l=" << l;
        return os.str();
    };

    const auto pairs = stable_pairs(K);
    parallel_for(pairs.size(), cfg.workers, [&](std::size_t i) {
        const auto [g, n] = pairs[i];
        const int D = dim(g, n);
        // iii at (g,n)
        for_each_multiset(n, static_cast<unsigned>(D) + 1, [&](const std::vector<unsigned>& d) {
            ++n3;
            if (!recursion_iii_residual(g, d, store).is_zero()) {
                ++bad3;
                note(label("iii", g, d));
            }
        });
        // i with left side at (g, n+2), ii with left side at (g, n+3)
        if (is_stable(g, n + 2) && dim(g, n + 2) <= static_cast<int>(K)) {
            for_each_multiset(n, static_cast<unsigned>(std::max(dim(g, n + 2), 0)), [&](const std::vector<unsigned>& d) {
                ++n1;
                if (!recursion_i_residual(g, d, store).is_zero()) {
                    ++bad1;
                    note(label("i", g, d));
                }
            });
        }
        if (is_stable(g, n + 3) && dim(g, n + 3) <= static_cast<int>(K)) {
            const int D3 = dim(g, n + 3);
            for_each_multiset(n, static_cast<unsigned>(D3), [&](const std::vector<unsigned>& d) {
                int w = 0;
                for (unsigned x : d) w += static_cast<int>(x);
                for (int l = 0; w + l + 1 <= D3; ++l) {
                    ++n2;
                    if (!recursion_ii_residual(g, d, static_cast<unsigned>(l), store).is_zero()) {
                        ++bad2;
                        note(label("ii", g, d, l));
                    }
                }
            });
        }
    });

    auto add = [&](const char* name, std::size_t count, std::size_t bad) {
        Check c;
        c.name = name;
        c.pass = bad == 0 && count > 0;
        c.measured = {{"instances", count}, {"nonzero_residuals", bad}};
        c.envelope = {{"nonzero_residuals", 0}};
        c.margin = bad == 0 ? 1.0 : -static_cast<double>(bad);
        rep.add(c);
    };
    add("recursion_iii_residuals", n3, bad3);
    add("recursion_i_residuals", n1, bad1);
    add("recursion_ii_residuals", n2, bad2);
    rep.details = {{"max_complexity", K}, {"failures", failures}};
    return rep;
}

// ---------------------------------------------------------------- bounds

Report suite_bounds(const Config& cfg, const SuiteOptions& opt, MemoStore& store) {
    Report rep;
    rep.suite = "bounds";
    const unsigned K = opt.bound_complexity;
    std::mt19937_64 rng(cfg.seed);

    // vanishing and non-negativity over every enumerated index
    {
        std::size_t count = 0, wrong = 0, negative = 0;
        for (auto [g, n] : stable_pairs(K)) {
            if (n == 0) continue;
            const int D = dim(g, n);
            for_each_multiset(n, static_cast<unsigned>(D) + 2, [&](const std::vector<unsigned>& d) {
                ++count;
                int w = 0;
                for (unsigned x : d) w += static_cast<int>(x);
                Rational v = intersection_coefficient(g, d, store);
                if ((v == 0) != (w > D)) ++wrong;
                if (v < 0) ++negative;
            });
        }
        Check c;
        c.name = "vanishing_iff_above_dimension";
        c.pass = wrong == 0;
        c.measured = {{"indices", count}, {"violations", wrong}};
        c.envelope = {{"violations", 0}};
        c.margin = wrong == 0 ? 1 : -1;
        rep.add(c);
        Check nn;
        nn.name = "non_negative";
        nn.pass = negative == 0;
        nn.measured = {{"indices", count}, {"negative", negative}};
        nn.envelope = {{"negative", 0}};
        nn.margin = negative == 0 ? 1 : -1;
        rep.add(nn);
    }
    // permutation invariance
    {
        std::size_t bad = 0;
        auto pairs = stable_pairs(K);
        pairs.erase(std::remove_if(pairs.begin(), pairs.end(), [](GN p) { return p.n < 2; }), pairs.end());
        for (int trial = 0; trial < 1000; ++trial) {
            GN p = pairs[rng() % pairs.size()];
            const int D = dim(p.g, p.n);
            std::vector<unsigned> d(p.n, 0);
            int left = D;
            for (auto& x : d) {
                x = static_cast<unsigned>(rng() % (left + 1));
                left -= static_cast<int>(x);
            }
            Rational ref = intersection_coefficient(p.g, d, store);
            std::shuffle(d.begin(), d.end(), rng);
            if (intersection_coefficient(p.g, d, store) != ref) ++bad;
        }
        Check c;
        c.name = "permutation_invariance";
        c.pass = bad == 0;
        c.measured = {{"trials", 1000}, {"mismatches", bad}};
        c.envelope = {{"mismatches", 0}};
        c.margin = bad == 0 ? 1 : -1;
        rep.add(c);
    }
    // 1 <= V(x)/V(0) <= exp(|x|/2)
    {
        auto pairs = stable_pairs(K);
        pairs.erase(std::remove_if(pairs.begin(), pairs.end(), [](GN p) { return p.n == 0; }), pairs.end());
        std::size_t bad = 0;
        double worst = 0;
        for (int trial = 0; trial < 100; ++trial) {
            GN p = pairs[rng() % pairs.size()];
            std::vector<Rational> x(p.n);
            Rational total = 0;
            for (auto& xi : x) {
                xi = Rational(static_cast<long>(rng() % 1001), 100 * static_cast<long>(p.n));
                xi.canonicalize();
                total += xi;
            }
            PiPoly v0 = volume(p.g, p.n, store);
            PiPoly vx = volume_at(p.g, p.n, x, store);
            PiPoly diff = vx - v0;
            bool lower = true;
            for (int j = 0; j <= diff.degree(); ++j)
                if (diff.coeff(static_cast<unsigned>(j)) < 0) lower = false;
            Interval ratio = eval_interval(vx, cfg.precision_bits) / eval_interval(v0, cfg.precision_bits);
            Interval cap = (Interval(total, cfg.precision_bits) / Interval(Rational(2), cfg.precision_bits)).exp();
            // x = 0 gives equality, which an enclosure cannot separate
            const bool upper = (vx == v0) || mpfr_lessequal_p(ratio.hi(), cap.lo());
            if (!lower || !upper) ++bad;
            worst = std::max(worst, ratio.hi_up() / cap.lo_down());
        }
        Check c;
        c.name = "volume_sandwich";
        c.pass = bad == 0;
        c.measured = {{"samples", 100}, {"violations", bad}, {"max_ratio_over_exp_bound", worst}};
        c.envelope = {{"max_ratio_over_exp_bound", 1}};
        c.margin = 1 - worst;
        rep.add(c);
    }
    // sum (a_{i+1}-a_i) i^r <= 2 r!
    {
        bool ok = true;
        json rows = json::array();
        double worst = 0;
        for (unsigned r = 0; r <= 20; ++r) {
            TailZetaBound t = tail_zeta_bound(r);
            ok = ok && t.holds;
            worst = std::max(worst, t.bound / t.claim);
            rows.push_back({{"r", r}, {"bound", t.bound}, {"claim", t.claim}});
        }
        const double pi = std::numbers::pi;
        TailZetaBound t0 = tail_zeta_bound(0);
        const double r0 = std::abs(t0.partial_hi - (1 - pi * pi / 12));
        Check c;
        c.name = "tail_zeta_bound";
        c.pass = ok && r0 <= 1e-10;
        c.measured = {{"rows", rows}, {"r0_minus_closed_form", r0}};
        c.envelope = {{"bound_over_claim", 1}, {"r0_tolerance", 1e-10}};
        c.margin = 1 - worst;
        rep.add(c);
    }
    // coefficient product inequality, exhaustive over compositions
    {
        std::size_t count = 0, bad = 0;
        std::vector<unsigned> t;
        std::function<void(unsigned)> rec = [&](unsigned left) {
            if (!t.empty()) {
                for (unsigned b : {2u, 3u, 10u, 600u})
                    for (unsigned c : {2u, 3u, 10u, 600u}) {
                        ++count;
                        if (!coeff_product_bound(t, b, c).holds) ++bad;
                    }
            }
            for (unsigned v = 1; v <= left; ++v) {
                t.push_back(v);
                rec(left - v);
                t.pop_back();
            }
        };
        rec(12);
        Check c;
        c.name = "coeff_product_bound";
        c.pass = bad == 0;
        c.measured = {{"instances", count}, {"violations", bad}};
        c.envelope = {{"violations", 0}};
        c.margin = bad == 0 ? 1 : -1;
        rep.add(c);
    }
    return rep;
}

// ---------------------------------------------------------------- mz

double rho_ratio_hi(unsigned g, MemoStore& store, mpfr_prec_t prec, double* lo_out) {
    // rho_{g+1}/rho_g = V_{g+1}/V_g sqrt((g+1)/g) / ((2g-1)(2g-2) (4 pi^2)^2)
    Interval v = eval_interval(volume(g + 1, 0, store), prec) / eval_interval(volume(g, 0, store), prec);
    Interval s = Interval(Rational(g + 1, g), prec).sqrt();
    Interval d = Interval(Rational((2 * g - 1) * (2 * g - 2)), prec) *
                 eval_interval(PiPoly::monomial(Rational(16), 2), prec);
    Interval r = v * s / d;
    if (lo_out) *lo_out = r.lo_down();
    return r.hi_up();
}

Report suite_mz(const Config& cfg, const SuiteOptions&, MemoStore& store) {
    Report rep;
    rep.suite = "mz";
    {
        bool ok = true;
        double worst = 0;
        json rows = json::array();
        for (unsigned g = std::max(6u, cfg.g_min); g <= std::max(12u, cfg.g_max); ++g) {
            double lo = 0;
            double hi = rho_ratio_hi(g, store, cfg.precision_bits, &lo);
            const double dev = std::max(std::abs(hi - 1), std::abs(lo - 1));
            ok = ok && dev <= 5.0 / g;
            worst = std::max(worst, dev * g / 5.0);
            rows.push_back({{"g", g}, {"ratio", (lo + hi) / 2}, {"deviation_times_g", dev * g}});
        }
        Check c;
        c.name = "mirzakhani_zograf_trend";
        c.pass = ok;
        c.measured = rows;
        c.envelope = {{"deviation_times_g", 5}};
        c.margin = 1 - worst;
        rep.add(c);
    }
    for (unsigned n = 0; n <= 3; ++n) {
        std::vector<std::pair<double, double>> s3, s4;
        for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) {
            s3.push_back({double(g), mz_ratio(g, n, store).value()});
            s4.push_back({double(g), a4_ratio(g, n, store).value()});
        }
        rep.add(envelope_check_named("a3_envelope_n" + std::to_string(n), s3, 1.0));
        rep.add(envelope_check_named("a4_envelope_n" + std::to_string(n), s4, 1.0));
    }
    {
        // [tau_0^n] from recursion iv against the evaluated volume polynomial and
        // against the dilaton form built from the (g, n+1) polynomial
        std::size_t count = 0, bad = 0;
        for (auto [g, n] : stable_pairs(8)) {
            if (n == 0) continue;
            ++count;
            PiPoly direct = intersection_number(TauIndex(g, std::vector<unsigned>(n, 0)), store);
            PiPoly evaluated = volume_polynomial(g, n, store).at(std::vector<Rational>(n, Rational(0)));
            VolumePolynomial up = volume_polynomial(g, n + 1, store);
            PiPoly dil;
            for (int l = 1; l <= dim(g, n + 1); ++l) {
                std::vector<unsigned> d(n + 1, 0);
                d[0] = static_cast<unsigned>(l);
                // coefficient of x^(2l) is [tau_l tau_0^n] / (2^(2l) (2l+1)!)
                PiPoly tau_l = up.coefficient(d) * Rational(Integer(1) << (2 * l)) * Rational(factorial(2 * l + 1));
                Rational c(l, 1);
                c /= Rational(factorial(2 * l + 1));
                if (l % 2 == 0) c = -c;
                dil += PiPoly::monomial(c, static_cast<unsigned>(l - 1)) * tau_l;
            }
            dil *= Rational(1, 2 * (2 * static_cast<int>(g) - 2 + static_cast<int>(n)));
            if (!(direct == evaluated) || !(direct == dil)) ++bad;
        }
        Check c;
        c.name = "normalization_two_paths";
        c.pass = bad == 0;
        c.measured = {{"pairs", count}, {"mismatches", bad}};
        c.envelope = {{"mismatches", 0}};
        c.margin = bad == 0 ? 1 : -1;
        rep.add(c);
    }
    return rep;
}

// ---------------------------------------------------------------- expansions

json fit_json(const FitReport& f) {
    return {{"coefficients", f.coeffs},
            {"condition_number", f.condition_number},
            {"residual_exponent", std::isfinite(f.residual_exponent) ? json(f.residual_exponent) : json(nullptr)},
            {"warning", f.warning}};
}

void expansions_ratio(Report& rep, const Config& cfg, MemoStore& store, bool a3) {
    for (unsigned n = 0; n <= 3; ++n) {
        std::vector<std::pair<double, double>> s;
        for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g)
            s.push_back({double(g), (a3 ? mz_ratio(g, n, store) : a4_ratio(g, n, store)).value()});
        Check c = envelope_check_named(std::string(a3 ? "a3" : "a4") + "_n" + std::to_string(n), s, 1.0);
        if (s.size() >= 4) c.measured["fit"] = fit_json(fit_expansion(s, 1));
        rep.add(c);
    }
}

void expansions_wpvols(Report& rep, const Config& cfg, MemoStore& store) {
    for (const Rational& x : {Rational(1, 2), Rational(1), Rational(2)}) {
        const double xd = x.get_d();
        const double target = std::sinh(xd / 2) / (xd / 2);
        std::vector<std::pair<double, double>> s;
        for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) {
            ExactQuotient q{volume_at(g, 1, {x}, store), volume(g, 1, store)};
            s.push_back({double(g), q.value()});
        }
        Check c = envelope_check_named("wpvols_x=" + to_string(x), s, target);
        if (s.size() >= 4) {
            FitReport f = fit_expansion(s, 2);
            const double rel = std::abs(f.coeffs[0] - target) / target;
            c.measured["fit"] = fit_json(f);
            c.measured["c0_relative_error"] = rel;
            c.pass = c.pass && rel <= 0.02;
        }
        c.envelope["c0_relative_error"] = 0.02;
        rep.add(c);
    }
}

double bump_on_0_3(double l) {
    const double y = (l - 1.5) / 1.5;
    const double u = 1 - y * y;
    return u <= 0 ? 0 : std::exp(-1 / u);
}

void expansions_corollary(Report& rep, const Config& cfg, MemoStore& store) {
    for (const Rational& l : {Rational(1, 2), Rational(1), Rational(2)}) {
        const double ld = l.get_d();
        const double target = 4 * std::sinh(ld / 2) * std::sinh(ld / 2) / (ld * ld);
        std::vector<std::pair<double, double>> s;
        for (unsigned g = std::max(cfg.g_min, 2u); g <= cfg.g_max; ++g) {
            ExactQuotient q{volume_at(g - 1, 2, {l, l}, store), volume(g, 0, store)};
            s.push_back({double(g), q.value()});
        }
        rep.add(envelope_check_named("corollary_l=" + to_string(l), s, target));
    }
    // simple-geodesic expectation against its leading integral
    std::vector<std::pair<double, double>> s;
    double worst_self = 0;
    QuadResult lead = simple_leading_integral(bump_on_0_3, 3.0);
    for (unsigned g = std::max(cfg.g_min, 2u); g <= cfg.g_max; ++g) {
        QuadResult e = simple_expectation(g, bump_on_0_3, 3.0, store);
        worst_self = std::max({worst_self, e.self_error, lead.self_error});
        s.push_back({double(g), e.value / lead.value});
    }
    Check c = envelope_check_named("simple_geodesic_expectation", s, 1.0);
    c.measured["max_quadrature_self_error"] = worst_self;
    c.envelope["max_quadrature_self_error"] = 1e-9;
    c.pass = c.pass && worst_self < 1e-9;
    rep.add(c);
}

// Random A(u) = sum a_t/u^t + b/(u^k (u+c)), c >= 0, so |A - sum| <= |b|/u^(k+1).
struct Instance {
    Expansion e;
    Rational b;
    unsigned c;
    Rational at(const Rational& g) const {
        const Rational u = g - e.base;
        Rational uk = 1;
        for (unsigned i = 0; i < e.order(); ++i) uk *= u;
        return e.partial_sum(g) + b / (uk * (u + c));
    }
};

Rational rand_q(std::mt19937_64& rng, long num = 20, long den = 9) {
    long p = static_cast<long>(rng() % (2 * num + 1)) - num;
    long q = 1 + static_cast<long>(rng() % den);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Instance random_instance(std::mt19937_64& rng, unsigned k, int base, const Rational& gmin, unsigned zeros = 0) {
    Instance in;
    in.e.base = base;
    in.e.g_min = gmin;
    for (unsigned t = 0; t <= k; ++t) in.e.coeffs.push_back(t < zeros ? Rational(0) : rand_q(rng));
    in.b = rand_q(rng);
    in.c = static_cast<unsigned>(rng() % 5);
    in.e.error = abs(in.b);
    return in;
}

bool holds(const Expansion& out, const Rational& value, const Rational& g) {
    const Rational u = g - out.base;
    Rational uk = 1;
    for (unsigned i = 0; i <= out.order(); ++i) uk *= u;
    return abs(value - out.partial_sum(g)) <= out.error / uk;
}

Report suite_algebra(const Config& cfg) {
    Report rep;
    rep.suite = "algebra";
    std::mt19937_64 rng(cfg.seed);
    std::size_t prod_bad = 0, lz_bad = 0, shift_bad = 0, samples = 0;
    for (int inst = 0; inst < 100; ++inst) {
        const unsigned k = static_cast<unsigned>(rng() % 4);
        const Rational gmin = Rational(2 + static_cast<long>(rng() % 6));
        // product
        {
            const unsigned n = 2 + static_cast<unsigned>(rng() % 3);
            std::vector<Instance> fs;
            std::vector<Expansion> es;
            for (unsigned i = 0; i < n; ++i) {
                fs.push_back(random_instance(rng, k + static_cast<unsigned>(rng() % 2), 0, gmin));
                es.push_back(fs.back().e);
            }
            Expansion out = expansion_product(es);
            for (int j = 0; j < 20; ++j) {
                Rational g = gmin + Rational(static_cast<long>(rng() % 4000), 7);
                g.canonicalize();
                Rational v = 1;
                for (auto& f : fs) v *= f.at(g);
                ++samples;
                if (!holds(out, v, g)) ++prod_bad;
            }
        }
        // leading zeros
        {
            const unsigned r = static_cast<unsigned>(rng() % 3);
            const unsigned s = k;  // k-(r+1) <= s <= k
            Instance a1 = random_instance(rng, s + r + 1, 0, gmin, r + 1);
            std::vector<Instance> rest{random_instance(rng, k, 0, gmin), random_instance(rng, k, 0, gmin)};
            Expansion out = expansion_product_leading_zeros(a1.e, {rest[0].e, rest[1].e}, r, s);
            for (int j = 0; j < 20; ++j) {
                Rational g = gmin + Rational(static_cast<long>(rng() % 4000), 7);
                g.canonicalize();
                Rational v = a1.at(g) * rest[0].at(g) * rest[1].at(g);
                if (!holds(out, v, g)) ++lz_bad;
            }
        }
        // base shift
        {
            const unsigned ks = static_cast<unsigned>(rng() % 3);
            const unsigned m = 1 + static_cast<unsigned>(rng() % (ks + 1));
            Rational gm((ks + 1) * (ks + 1) * (ks + 1) + m + static_cast<unsigned>(rng() % 5));
            Instance a = random_instance(rng, ks, static_cast<int>(m), gm);
            Expansion out = shift_base(a.e, m);
            for (int j = 0; j < 20; ++j) {
                Rational g = gm + Rational(static_cast<long>(rng() % 4000), 7);
                g.canonicalize();
                if (!holds(out, a.at(g), g)) ++shift_bad;
            }
        }
    }
    // symbolic oracles
    bool symbolic = true;
    for (long m = 1; m <= 4; ++m) {
        std::vector<Rational> geo(8, Rational(0));
        geo[1] = 1;  // 1/(g-m)
        auto b = shift_coefficients(geo, m);
        for (unsigned t = 1; t < 8; ++t) {
            Rational expect = 1;
            for (unsigned i = 1; i < t; ++i) expect *= m;
            if (b[t] != expect) symbolic = false;
        }
        std::vector<Rational> a;
        for (int t = 0; t < 8; ++t) a.push_back(rand_q(rng));
        if (shift_coefficients(shift_coefficients(a, m), -m) != a) symbolic = false;
    }
    auto add = [&](const char* name, std::size_t bad) {
        Check c;
        c.name = name;
        c.pass = bad == 0;
        c.measured = {{"violations", bad}};
        c.envelope = {{"violations", 0}};
        c.margin = bad == 0 ? 1 : -1;
        rep.add(c);
    };
    add("product_contract", prod_bad);
    add("leading_zero_product_contract", lz_bad);
    add("shift_contract", shift_bad);
    add("symbolic_shift_oracle", symbolic ? 0 : 1);
    rep.details = {{"instances", 100}, {"product_samples", samples}};
    return rep;
}

Report suite_expansions(const Config& cfg, const SuiteOptions& opt, MemoStore& store) {
    Report rep;
    rep.suite = "expansions";
    const std::string& s = opt.expansion_suite;
    if (!s.empty() && s != "a3" && s != "a4" && s != "wpvols" && s != "corollary" && s != "algebra")
        throw DomainError("unknown expansions suite '" + s + "' (a3, a4, wpvols, corollary, algebra)");
    if (s.empty() || s == "a3") expansions_ratio(rep, cfg, store, true);
    if (s.empty() || s == "a4") expansions_ratio(rep, cfg, store, false);
    if (s.empty() || s == "wpvols") expansions_wpvols(rep, cfg, store);
    if (s.empty() || s == "corollary") expansions_corollary(rep, cfg, store);
    if (s.empty() || s == "algebra") rep.merge(suite_algebra(cfg));
    return rep;
}

// ---------------------------------------------------------------- spectral

Report suite_spectral(const Config& cfg) {
    Report rep;
    rep.suite = "spectral";
    SpectralContext ctx(build_test_function());
    const TestFunction& tf = ctx.test_function();
    auto simple = [&](const std::string& name, bool pass, json measured, json envelope, double margin) {
        Check c;
        c.name = name;
        c.pass = pass;
        c.measured = std::move(measured);
        c.envelope = std::move(envelope);
        c.margin = margin;
        rep.add(c);
    };
    {
        double lowest = 0;
        for (int i = 0; i < 10000; ++i) lowest = std::min(lowest, tf.transform_direct(-50 + 100.0 * i / 9999));
        bool even = true;
        for (std::size_t j = 0, k = tf.f0.size() - 1; j < k; ++j, --k) even = even && tf.f0[j] == tf.f0[k];
        const bool support = tf.f0.front() == 0 && tf.f0.back() == 0 && tf.f0_at(1.0) == 0 && tf.f0_at(-1.5) == 0;
        bool nonneg = true;
        for (double v : tf.f0) nonneg = nonneg && v >= 0;
        simple("transform_non_negative", lowest >= -1e-12, {{"min", lowest}}, {{"min", -1e-12}}, lowest + 1e-12);
        simple("f0_even_and_supported", even && support && nonneg, {{"even", even}, {"support", support}, {"non_negative", nonneg}},
               {{"exact", true}}, 1);
        bool inc = true;
        double prev = ctx.f_imag(0);
        double min_step = 1;
        for (int i = 1; i < 100; ++i) {
            double v = ctx.f_imag(0.5 * i / 99);
            inc = inc && v > prev;
            min_step = std::min(min_step, v - prev);
            prev = v;
        }
        simple("f_imag_increasing", inc, {{"min_step", min_step}}, {{"min_step", 0}}, min_step);
    }
    {
        double worst = 0;
        for (unsigned t = 1; t <= 6; ++t) {
            const double f0t = std::pow(ctx.f0_value(), t);
            worst = std::max(worst, std::abs(ctx.conv_power(t).mass() - f0t) / f0t);
        }
        simple("conv_power_mass", worst <= 1e-8, {{"max_relative_error", worst}}, {{"tolerance", 1e-8}}, 1e-8 - worst);
    }
    {
        json rows = json::array();
        double worst = 0;
        bool ok = true;
        for (unsigned t = 1; t <= 4; ++t) {
            try {
                A0Result a = a0(ctx, t);
                worst = std::max(worst, a.rel_diff);
                rows.push_back({{"t", t}, {"rho_route", a.rho_route}, {"r_route", a.r_route}, {"rel_diff", a.rel_diff}});
            } catch (const NumericError& e) {
                ok = false;
                rows.push_back({{"t", t}, {"error", e.what()}});
            }
        }
        simple("a0_dual_quadrature", ok && worst <= 1e-8, rows, {{"tolerance", 1e-8}}, 1e-8 - worst);
    }
    {
        double worst = 0;
        for (unsigned j = 0; j <= 5; ++j) {
            std::vector<double> s(j + 1, 0.0);
            s[j] = 1;
            worst = std::max(worst, nu_tilde1(ctx, s).rel_diff);
        }
        simple("nu_tilde_identity", worst <= 1e-6, {{"max_relative_error", worst}}, {{"tolerance", 1e-6}}, 1e-6 - worst);
    }
    {
        SupportReport s = support_check(ctx, 12, static_cast<unsigned>(cfg.seed));
        json rows = json::array();
        double worst = 0;
        for (auto& r : s.rows) {
            worst = std::max(worst, r.diff / r.bound);
            rows.push_back({{"p", r.p}, {"difference", r.diff}, {"bound", r.bound}, {"root", r.p ? json(r.root) : json(nullptr)}});
        }
        simple("support_check", s.holds, {{"rows", rows}, {"sinh_worst_margin", s.sinh_worst_margin}},
               {{"difference_over_bound", 1 + 1e-6}}, 1 - worst);
    }
    {
        double worst = 0;
        for (unsigned t = 1; t <= 4; ++t) {
            A1Result a = a1(ctx, t);
            const ConvolutionPower& F = ctx.conv_power(t);
            auto H = [&F](double l) { return l == 0 ? F.at(0) : l / (2 * std::sinh(l / 2)) * F.at(l); };
            QuadResult q = simple_leading_integral(H, F.half_width);
            worst = std::max(worst, std::abs(q.value - a.k1_term) / a.k1_term);
        }
        simple("a1_k1_slice_vs_leading_integral", worst <= 1e-8, {{"max_relative_error", worst}}, {{"tolerance", 1e-8}},
               1e-8 - worst);
    }
    {
        const double eps = 1e-5;
        Window w1(ctx, eps), w2(ctx, eps / 4);
        json rows = json::array();
        for (unsigned m = 1; m <= 4; ++m) {
            const double r = w2.derivative_norm(m) / w1.derivative_norm(m);
            const double want = std::pow(2.0, m);
            const bool ok = r >= want / 4 && r <= want * 4;
            Check c;
            c.name = "window_scaling_m" + std::to_string(m);
            c.pass = ok;
            c.measured = {{"ratio", r}, {"eps", eps}};
            c.envelope = {{"expected", want}, {"factor", 4}};
            c.margin = 1 - std::abs(std::log(r / want)) / std::log(4.0);
            rep.add(c);
        }
    }
    {
        const std::size_t N = 1 << 10;
        std::vector<double> s(N + 1);
        for (std::size_t j = 0; j <= N; ++j) s[j] = std::cos(3 * std::numbers::pi * j / N);
        ChebyshevResult c3 = chebyshev_coeffs(s);
        double off = 0;
        for (std::size_t k = 0; k < c3.a.size(); ++k)
            if (k != 3) off = std::max(off, std::abs(c3.a[k]));
        const bool ok = std::abs(c3.a[3] - 1) < 1e-12 && off < 1e-12 && c3.reconstruction_error < 1e-9;
        simple("chebyshev_cos3", ok, {{"a3", c3.a[3]}, {"max_other", off}, {"reconstruction_error", c3.reconstruction_error}},
               {{"tolerance", 1e-12}}, 1e-12 - off);
    }
    return rep;
}

}  // namespace

Report run_suite(const std::string& name, const Config& cfg, const SuiteOptions& opt, MemoStore& store) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    if (name == "recursions") rep = suite_recursions(cfg, opt, store);
    else if (name == "bounds") rep = suite_bounds(cfg, opt, store);
    else if (name == "mz") rep = suite_mz(cfg, opt, store);
    else if (name == "expansions") rep = suite_expansions(cfg, opt, store);
    else if (name == "spectral") rep = suite_spectral(cfg);
    else if (name == "all") {
        rep.suite = "all";
        for (const char* s : {"recursions", "bounds", "mz", "expansions", "spectral"}) {
            Report r = run_suite(s, cfg, opt, store);
            for (auto c : r.checks) {
                c.name = std::string(s) + "." + c.name;
                rep.add(c);
            }
            if (!r.details.empty()) rep.details[s] = r.details;
        }
    } else {
        throw DomainError("unknown suite '" + name + "' (recursions, bounds, mz, expansions, spectral, all)");
    }
    rep.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<std::string> volume_table(unsigned max_complexity, const Config& cfg, MemoStore& store) {
    const auto pairs = stable_pairs(max_complexity);
    std::vector<std::string> rows(pairs.size());
    parallel_for(pairs.size(), cfg.workers, [&](std::size_t i) {
        const auto [g, n] = pairs[i];
        PiPoly v = volume(g, n, store);
        const unsigned deg = static_cast<unsigned>(dim(g, n));
        std::ostringstream os;
        os.precision(17);
        os << g << ',' << n << ',' << dim(g, n) << ',' << deg << ',' << to_string(v.coeff(deg)) << ','
           << eval_interval(v, cfg.precision_bits).mid() << ',' << mz_ratio(g, n, store).value();
        rows[i] = os.str();
    });
    rows.insert(rows.begin(), "g,n,complexity,pi2_degree,coefficient,value,mz_ratio");
    return rows;
}

json trace_coefficients(unsigned t_lo, unsigned t_hi, double rel_tol) {
    if (t_lo < 1 || t_lo > t_hi) throw DomainError("need 1 <= t_lo <= t_hi");
    SpectralContext ctx(build_test_function());
    json rows = json::array();
    for (unsigned t = t_lo; t <= t_hi; ++t) {
        A0Result a = a0(ctx, t, rel_tol);
        A1Result b = a1(ctx, t, rel_tol);
        rows.push_back({{"t", t},
                        {"a0", a.rho_route},
                        {"a1", b.value},
                        {"error_estimates",
                         {{"a0_route_rel_diff", a.rel_diff},
                          {"a0_tail_bound", a.tail_bound},
                          {"a0_cutoff", a.cutoff},
                          {"a1_route_rel_diff", b.rel_diff},
                          {"a1_k_tail_width", b.k_tail_width}}}});
    }
    return {{"schema_version", kSchemaVersion}, {"rows", rows}};
}

}  // namespace wpvol
