#include "wpvol/exact/zeta.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace wpvol {

namespace {

// B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k
class BernoulliTable {
public:
    Rational get(unsigned n) {
        {
            std::shared_lock lock(mu_);
            if (n < b_.size()) return b_[n];
        }
        std::unique_lock lock(mu_);
        if (b_.empty()) b_.emplace_back(1);
        while (b_.size() <= n) {
            const unsigned m = static_cast<unsigned>(b_.size());
            Rational s = 0;
            for (unsigned k = 0; k < m; ++k) {
                if (b_[k] == 0) continue;
                s += Rational(binomial(m + 1, k)) * b_[k];
            }
            Rational bm = -s / (m + 1);
            bm.canonicalize();
            b_.push_back(bm);
        }
        return b_[n];
    }

private:
    std::shared_mutex mu_;
    std::deque<Rational> b_;  // deque: references survive growth
};

BernoulliTable& table() {
    static BernoulliTable t;
    return t;
}

}  // namespace

Rational bernoulli(unsigned n) { return table().get(n); }

// zeta(2i) = (-1)^(i+1) B_2i (2 pi)^(2i) / (2 (2i)!)
PiPoly zeta_even(unsigned i) {
    Rational c = bernoulli(2 * i) * Rational(Integer(1) << (2 * i)) / Rational(2 * factorial(2 * i));
    if (i % 2 == 0) c = -c;
    c.canonicalize();
    return PiPoly::monomial(c, i);
}

const Rational& a_rational(unsigned i) {
    static std::shared_mutex mu;
    static std::deque<Rational> cache;
    {
        std::shared_lock lock(mu);
        if (i < cache.size()) return cache[i];
    }
    std::unique_lock lock(mu);
    while (cache.size() <= i) {
        const unsigned j = static_cast<unsigned>(cache.size());
        if (j == 0) {
            cache.emplace_back(1, 2);
            continue;
        }
        Rational factor = 1 - Rational(2) / Rational(Integer(1) << (2 * j));
        Rational a = factor * zeta_even(j).coeff(j);
        a.canonicalize();
        cache.push_back(a);
    }
    return cache[i];
}

PiPoly a_coeff(unsigned i) { return PiPoly::monomial(a_rational(i), i); }

}  // namespace wpvol
