#include "wpvol/volumes/volumes.hpp"

#include "wpvol/errors.hpp"
#include "wpvol/intersection/intersection.hpp"
#include "wpvol/intersection/tau_index.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wpvol {

namespace {

// Non-increasing sequences of length n with sum <= cap.
void for_each_multiset(unsigned n, unsigned cap, const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> d(n, 0);
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned pos, unsigned left, unsigned maxv) {
        if (pos == n) {
            fn(d);
            return;
        }
        for (unsigned v = 0; v <= std::min(left, maxv); ++v) {
            d[pos] = v;
            rec(pos + 1, left - v, v);
        }
    };
    rec(0, cap, cap);
}

Rational coefficient_scale(const std::vector<unsigned>& d) {
    Integer den = 1;
    unsigned w = 0;
    for (unsigned di : d) {
        den *= factorial(2 * di + 1);
        w += di;
    }
    den <<= 2 * w;
    return Rational(Integer(1), den);
}

}  // namespace

PiPoly VolumePolynomial::coefficient(std::vector<unsigned> d) const {
    if (d.size() != n_) throw DomainError("exponent vector has the wrong length");
    std::sort(d.begin(), d.end(), std::greater<>());
    auto it = terms_.find(d);
    return it == terms_.end() ? PiPoly() : it->second;
}

// Monomial symmetric evaluation: for each exponent multiset, distribute its
// parts over the variables with a DP on the remaining multiplicities.
PiPoly VolumePolynomial::at(const std::vector<Rational>& x) const {
    if (x.size() != n_) throw DomainError("expected " + std::to_string(n_) + " boundary lengths");
    for (const auto& xi : x)
        if (xi < 0) throw DomainError("boundary lengths must be non-negative");
    unsigned maxd = 0;
    for (const auto& [d, c] : terms_)
        if (!d.empty()) maxd = std::max(maxd, d.front());
    std::vector<std::vector<Rational>> pw(n_, std::vector<Rational>(maxd + 1));
    for (unsigned i = 0; i < n_; ++i) {
        Rational y = x[i] * x[i];
        pw[i][0] = 1;
        for (unsigned k = 1; k <= maxd; ++k) pw[i][k] = pw[i][k - 1] * y;
    }
    PiPoly total;
    for (const auto& [d, c] : terms_) {
        std::vector<unsigned> val, mult;
        for (unsigned v : d) {
            if (!val.empty() && val.back() == v) ++mult.back();
            else {
                val.push_back(v);
                mult.push_back(1);
            }
        }
        std::map<std::vector<unsigned>, Rational> dp{{mult, Rational(1)}};
        for (unsigned i = 0; i < n_; ++i) {
            std::map<std::vector<unsigned>, Rational> next;
            for (const auto& [rem, acc] : dp)
                for (std::size_t t = 0; t < val.size(); ++t) {
                    if (rem[t] == 0) continue;
                    auto r2 = rem;
                    --r2[t];
                    next[r2] += acc * pw[i][val[t]];
                }
            dp = std::move(next);
        }
        Rational m = dp.empty() ? Rational(0) : dp.begin()->second;
        if (m != 0) total += c * m;
    }
    return total;
}

std::vector<PiPoly> VolumePolynomial::diagonal() const {
    std::vector<PiPoly> out;
    for (const auto& [d, c] : terms_) {
        unsigned w = 0;
        Integer perms = factorial(n_);
        std::map<unsigned, unsigned> mult;
        for (unsigned v : d) {
            w += v;
            ++mult[v];
        }
        for (const auto& [v, m] : mult) perms /= factorial(m);
        if (out.size() <= w) out.resize(w + 1);
        out[w] += c * Rational(perms);
    }
    return out;
}

VolumePolynomial volume_polynomial(unsigned g, unsigned n, MemoStore& store) {
    if (n == 0 || !is_stable(g, n)) throw DomainError("volume_polynomial needs a stable (g,n) with n >= 1");
    VolumePolynomial vp(g, n);
    const unsigned top = 3 * g - 3 + n;
    for_each_multiset(n, top, [&](const std::vector<unsigned>& d) {
        PiPoly t = intersection_number(TauIndex(g, d), store);
        vp.set(d, t * coefficient_scale(d));
    });
    return vp;
}

PiPoly closed_volume(unsigned g, MemoStore& store) {
    if (g < 2) throw DomainError("closed volumes need g >= 2");
    return intersection_number(TauIndex(g, {}), store);
}

PiPoly volume(unsigned g, unsigned n, MemoStore& store) {
    if (!is_stable(g, n)) throw DomainError("unstable (g,n)");
    if (n == 0) return closed_volume(g, store);
    return intersection_number(TauIndex(g, std::vector<unsigned>(n, 0)), store);
}

PiPoly volume_at(unsigned g, unsigned n, const std::vector<Rational>& x, MemoStore& store) {
    for (const auto& xi : x)
        if (xi < 0) throw DomainError("boundary lengths must be non-negative");
    if (n == 0) {
        if (!x.empty()) throw DomainError("closed surfaces take no lengths");
        return closed_volume(g, store);
    }
    return volume_polynomial(g, n, store).at(x);
}

ExactQuotient mz_ratio(unsigned g, unsigned n, MemoStore& store) {
    if (!is_stable(g, n)) throw DomainError("unstable (g,n)");
    ExactQuotient q;
    q.num = PiPoly::monomial(Rational(4 * (2 * static_cast<int>(g) - 2 + static_cast<int>(n))), 1) * volume(g, n, store);
    q.den = volume(g, n + 1, store);
    return q;
}

ExactQuotient a4_ratio(unsigned g, unsigned n, MemoStore& store) {
    if (g < 1 || !is_stable(g, n) || !is_stable(g - 1, n + 2)) throw DomainError("a4_ratio needs stable (g,n) and (g-1,n+2)");
    return {volume(g - 1, n + 2, store), volume(g, n, store)};
}

PiPoly w_r(unsigned r, MemoStore& store) {
    if (r < 2) throw DomainError("W_r needs r >= 2");
    if (r % 2 == 0) return closed_volume(r / 2 + 1, store);
    return volume((r + 1) / 2, 1, store);
}

std::vector<double> normalized_doubles(const std::vector<PiPoly>& poly, const PiPoly& by) {
    Interval den = eval_interval(by, 256);
    std::vector<double> out(poly.size(), 0.0);
    for (std::size_t j = 0; j < poly.size(); ++j)
        if (!poly[j].is_zero()) out[j] = (eval_interval(poly[j], 256) / den).mid();
    return out;
}

}  // namespace wpvol
