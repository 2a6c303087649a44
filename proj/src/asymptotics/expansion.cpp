#include "wpvol/asymptotics/expansion.hpp"

#include "wpvol/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace wpvol {

namespace {

Rational rpow(const Rational& x, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

// sum_t |a_t| / u^t
Rational abs_sum(const std::vector<Rational>& a, const Rational& u) {
    Rational s = 0, p = 1;
    for (const auto& c : a) {
        s += abs(c) / p;
        p *= u;
    }
    return s;
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Rational> abs_vec(std::vector<Rational> a) {
    for (auto& c : a) c = abs(c);
    return a;
}

void require_common_base(const std::vector<Expansion>& v) {
    for (const auto& e : v) {
        if (e.coeffs.empty()) throw DomainError("expansion without coefficients");
        if (e.base != v.front().base) throw DomainError("expansions with different bases");
        if (e.u_min() < 1) throw DomainError("expansion needs g_min - base >= 1");
    }
}

// Error constant of the product lemma, all inputs of the same order k,
// evaluated at u. Each group times u^(k+1) is non-increasing in u.
Rational product_error(const std::vector<Expansion>& in, unsigned k, const Rational& u) {
    const std::size_t n = in.size();
    if (n > 20) throw DomainError("product of more than 20 expansions");
    std::vector<Rational> P(n);
    for (std::size_t i = 0; i < n; ++i) P[i] = abs_sum(in[i].coeffs, u);
    const Rational uk1 = rpow(u, k + 1);

    Rational total = 0;
    const unsigned long full = (1ul << n) - 1;
    for (unsigned long mask = 0; mask < full; ++mask) {  // mask = I, complement nonempty
        Rational term = 1;
        unsigned missing = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                term *= P[i];
            } else {
                term *= in[i].error;
                ++missing;
            }
        }
        term /= rpow(uk1, missing - 1);
        total += term;
    }
    std::vector<Rational> conv = abs_vec(in[0].coeffs);
    for (std::size_t i = 1; i < n; ++i) conv = convolve(conv, abs_vec(in[i].coeffs));
    Rational up = 1;
    for (std::size_t t = k + 1; t < conv.size(); ++t) {
        total += conv[t] / up;
        up *= u;
    }
    return total;
}

}  // namespace

Rational Expansion::partial_sum(const Rational& g) const {
    const Rational u = g - base;
    Rational s = 0, p = 1;
    for (const auto& c : coeffs) {
        s += c / p;
        p *= u;
    }
    return s;
}

double Expansion::error_double() const {
    double d = error.get_d();
    return std::nextafter(d, INFINITY);
}

Expansion truncate(const Expansion& e, unsigned order) {
    if (order >= e.order()) return e;
    const unsigned k = e.order();
    const Rational u = e.u_min();
    if (u < 1) throw DomainError("expansion needs g_min - base >= 1");
    Expansion out = e;
    out.coeffs.resize(order + 1);
    // |a_t|/u^t <= |a_t| u_min^(s+1-t) / u^(s+1) for t > s
    Rational c = e.error / rpow(u, k - order);
    for (unsigned t = order + 1; t <= k; ++t) c += abs(e.coeffs[t]) / rpow(u, t - order - 1);
    out.error = c;
    return out;
}

Expansion expansion_product(const std::vector<Expansion>& inputs) {
    if (inputs.empty()) throw DomainError("empty product");
    require_common_base(inputs);
    unsigned k = inputs.front().order();
    Rational gmin = inputs.front().g_min;
    for (const auto& e : inputs) {
        k = std::min(k, e.order());
        gmin = std::max(gmin, e.g_min);
    }
    std::vector<Expansion> in;
    for (const auto& e : inputs) {
        Expansion t = e;
        t.g_min = gmin;
        in.push_back(truncate(t, k));
    }
    const Rational u = gmin - inputs.front().base;

    std::vector<Rational> conv = in[0].coeffs;
    for (std::size_t i = 1; i < in.size(); ++i) conv = convolve(conv, in[i].coeffs);
    conv.resize(k + 1);

    Expansion out;
    out.base = inputs.front().base;
    out.coeffs = std::move(conv);
    out.g_min = gmin;
    out.error = product_error(in, k, u);
    return out;
}

Expansion expansion_product_leading_zeros(const Expansion& a1, const std::vector<Expansion>& rest, unsigned r,
                                          unsigned s) {
    if (rest.empty()) throw DomainError("leading-zero product needs at least two factors");
    std::vector<Expansion> all = rest;
    all.push_back(a1);
    require_common_base(all);
    unsigned k = rest.front().order();
    Rational gmin = a1.g_min;
    for (const auto& e : rest) {
        k = std::min(k, e.order());
        gmin = std::max(gmin, e.g_min);
    }
    if (s > k || s + r + 1 < k) throw DomainError("need k-(r+1) <= s <= k");
    if (a1.order() < s + r + 1) throw DomainError("first factor known to too low an order");
    for (unsigned t = 0; t <= r; ++t)
        if (a1.coeffs[t] != 0) throw DomainError("first factor has a nonzero leading coefficient");

    // A1 = u^-(r+1) * (sum_{t<=s} a_{t+r+1}/u^t + C/u^(s+1)); the lemma at order s
    // is linear in the A1 data, so the u^-(r+1) factors out of every group.
    Expansion lifted = a1;
    lifted.g_min = gmin;
    lifted = truncate(lifted, s + r + 1);
    Expansion reduced;
    reduced.base = a1.base;
    reduced.g_min = gmin;
    reduced.coeffs.assign(lifted.coeffs.begin() + r + 1, lifted.coeffs.end());
    reduced.error = lifted.error;

    std::vector<Expansion> in{reduced};
    for (const auto& e : rest) {
        Expansion t = e;
        t.g_min = gmin;
        in.push_back(truncate(t, s));
    }
    Expansion p = expansion_product(in);
    Expansion out;
    out.base = a1.base;
    out.g_min = gmin;
    out.coeffs.assign(r + 1, Rational(0));
    out.coeffs.insert(out.coeffs.end(), p.coeffs.begin(), p.coeffs.end());
    out.error = p.error;
    return out;
}

std::vector<Rational> shift_coefficients(const std::vector<Rational>& a, long m) {
    std::vector<Rational> out(a.size(), Rational(0));
    if (a.empty()) return out;
    out[0] = a[0];
    const Rational mq(m);
    for (std::size_t t = 1; t < a.size(); ++t)
        for (std::size_t i = 1; i <= t; ++i)
            out[t] += Rational(binomial(t - 1, i - 1)) * rpow(mq, t - i) * a[i];
    return out;
}

std::vector<Rational> shift_envelope(const std::vector<Rational>& a) {
    std::vector<Rational> env(a.size(), Rational(0));
    Rational best = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        Rational f(factorial(i - 1));
        best = std::max(best, Rational(abs(a[i]) / f));
        env[i] = best * f;
    }
    return env;
}

Expansion shift_base(const Expansion& e, unsigned m) { return shift_base(e, m, shift_envelope(e.coeffs)); }

Expansion shift_base(const Expansion& e, unsigned m, const std::vector<Rational>& envelope) {
    if (m == 0) return e;
    if (e.base != static_cast<int>(m)) throw DomainError("shift_base: expansion base differs from m");
    const unsigned k = e.order();
    if (m > k + 1) throw DomainError("shift_base: need m <= k+1");
    if (rpow(Rational(k + 1), 3) > e.g_min) throw DomainError("shift_base: need (k+1)^3 <= g_min");
    if (e.u_min() < 1) throw DomainError("shift_base: need g_min - m >= 1");
    if (envelope.size() != e.coeffs.size()) throw DomainError("shift_base: envelope size mismatch");
    for (unsigned i = 1; i <= k; ++i) {
        if (envelope[i] < abs(e.coeffs[i])) throw DomainError("shift_base: envelope below a coefficient");
        if (i > 1 && envelope[i] / Rational(factorial(i - 1)) < envelope[i - 1] / Rational(factorial(i - 2)))
            throw DomainError("shift_base: envelope a~_i/(i-1)! must be non-decreasing");
    }

    mpfr_t x;
    mpfr_init2(x, 64);
    mpfr_set_ui(x, m, MPFR_RNDU);
    mpfr_exp(x, x, MPFR_RNDU);
    Rational em;
    mpfr_get_q(em.get_mpq_t(), x);
    mpfr_clear(x);

    Expansion out;
    out.base = 0;
    out.g_min = e.g_min;
    out.coeffs = shift_coefficients(e.coeffs, m);
    out.error = 3 * e.error;
    if (k > 0) out.error += 3 * Rational(k * k) * em * envelope[k];
    return out;
}

bool ErrorPolynomial::within_envelope(double M) const {
    for (const auto& [t, c] : coeffs) {
        double f = 1;
        for (unsigned ti : t) f *= std::tgamma(ti + 1.0);
        if (std::abs(c) * f > M * (1 + 1e-12)) return false;
    }
    return true;
}

}  // namespace wpvol
