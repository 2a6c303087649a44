#include "wpvol/intersection/intersection.hpp"

#include "wpvol/errors.hpp"
#include "wpvol/exact/zeta.hpp"

#include <algorithm>
#include <functional>

namespace wpvol {

namespace {

// Keys are byte strings: key[0] = g, key[1..] = d descending.
using Key = std::string;

unsigned key_g(const Key& k) { return static_cast<unsigned char>(k[0]); }
unsigned key_n(const Key& k) { return static_cast<unsigned>(k.size() - 1); }

unsigned weight_of(const std::string& d) {
    unsigned w = 0;
    for (char c : d) w += static_cast<unsigned char>(c);
    return w;
}

// Inserts v into a descending byte string.
std::string with(std::string d, unsigned v) {
    auto pos = std::find_if(d.begin(), d.end(), [v](char c) { return static_cast<unsigned char>(c) < v; });
    d.insert(pos, static_cast<char>(v));
    return d;
}

Key make_key(unsigned g, const std::string& d) {
    Key k(1, static_cast<char>(g));
    k += d;
    return k;
}

// Distinct values of a descending byte string with multiplicities.
struct Groups {
    std::vector<unsigned> val, mult;
};

Groups group(const std::string& d) {
    Groups gr;
    for (char c : d) {
        unsigned v = static_cast<unsigned char>(c);
        if (!gr.val.empty() && gr.val.back() == v) ++gr.mult.back();
        else {
            gr.val.push_back(v);
            gr.mult.push_back(1);
        }
    }
    return gr;
}

class Engine {
public:
    explicit Engine(MemoStore& s) : store_(s) {}

    Rational coeff(const Key& key) { return *ref(key); }

    // Pointer into the store or to a static constant.
    const Rational* ref(const Key& key) {
        static const Rational zero(0), one(1), tau0(1, 12), tau1(1, 2);
        const unsigned g = key_g(key), n = key_n(key);
        if (2 * g + n < 3) return &zero;
        const std::string d = key.substr(1);
        const int m = 3 * static_cast<int>(g) - 3 + static_cast<int>(n) - static_cast<int>(weight_of(d));
        if (m < 0) return &zero;
        if (g == 0 && n == 3) return &one;
        if (g == 1 && n == 1) return d[0] == 0 ? &tau0 : &tau1;
        if (const Rational* hit = store_.find_ptr(key)) {
            store_.note_hit();
            return hit;
        }
        store_.note_miss();
        if (interrupt_requested()) throw Interrupted();
        Rational v = compute(g, d);
        store_.insert(key, v);
        return store_.find_ptr(key);
    }

private:
    Rational compute(unsigned g, const std::string& d);

    // [tau_k prod_I]_{g,|I|+1} for k = 0..D over a common denominator.
    std::vector<Integer> scaled(const std::string& I, unsigned g, int D, Integer& den) {
        std::vector<const Rational*> c(D + 1);
        den = 1;
        for (int k = 0; k <= D; ++k) {
            c[k] = ref(make_key(g, with(I, static_cast<unsigned>(k))));
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c[k]->get_den_mpz_t());
        }
        std::vector<Integer> out(D + 1);
        for (int k = 0; k <= D; ++k) {
            mpz_divexact(out[k].get_mpz_t(), den.get_mpz_t(), c[k]->get_den_mpz_t());
            out[k] *= c[k]->get_num();
        }
        return out;
    }

    MemoStore& store_;
};

// Mirzakhani's recursion in the homogeneous form: each a_l contributes only its
// rational factor alpha_l; the pi powers match on both sides.
//   A = 8 sum_j sum_l (2d_j+1) a_l [tau_{d1+dj+l-1} prod_{i!=1,j}]_{g,n-1}
//   B = 16 sum_{k1,k2} a_l [tau_k1 tau_k2 prod_{i!=1}]_{g-1,n+1}
//   C = 16 sum_{g1+g2=g} sum_{I+J} sum_{k1,k2} a_l [tau_k1 prod_I]_{g1} [tau_k2 prod_J]_{g2}
// with l = k1+k2+2-d1 in B and C.
Rational Engine::compute(unsigned g, const std::string& d) {
    const unsigned n = static_cast<unsigned>(d.size());
    if (n == 0) {
        // closed surfaces: (2g-2) V_g = 1/2 sum_l (-1)^(l-1) l pi^(2l-2)/(2l+1)! [tau_l]_{g,1}
        Rational s = 0;
        for (unsigned l = 1; l <= 3 * g - 2; ++l) {
            Rational t = coeff(make_key(g, std::string(1, static_cast<char>(l)))) * l / Rational(factorial(2 * l + 1));
            if (l % 2 == 0) s -= t;
            else s += t;
        }
        s /= 2 * (2 * g - 2);
        return s;
    }
    const unsigned d1 = static_cast<unsigned char>(d[0]);
    const std::string rest = d.substr(1);
    const unsigned wrest = weight_of(rest);
    const int top = 3 * static_cast<int>(g) - 3 + static_cast<int>(n);  // dimension at (g,n)
    const Groups gr = group(rest);

    Rational A = 0;
    if (2 * g + n - 1 >= 3) {
        for (std::size_t j = 0; j < gr.val.size(); ++j) {
            const unsigned v = gr.val[j];
            std::string minus = rest;
            minus.erase(minus.find(static_cast<char>(v)), 1);
            const int emax = top - 1 - static_cast<int>(wrest - v);
            const int emin = std::max(0, static_cast<int>(d1 + v) - 1);
            Rational s = 0;
            for (int e = emin; e <= emax; ++e) {
                const unsigned l = static_cast<unsigned>(e + 1 - static_cast<int>(d1 + v));
                s += a_rational(l) * *ref(make_key(g, with(minus, static_cast<unsigned>(e))));
            }
            A += s * (gr.mult[j] * (2 * v + 1));
        }
        A *= 8;
    }

    Rational B = 0;
    if (g >= 1 && 2 * (g - 1) + n + 1 >= 3) {
        const int smax = 3 * static_cast<int>(g - 1) - 3 + static_cast<int>(n + 1) - static_cast<int>(wrest);
        const int smin = std::max(0, static_cast<int>(d1) - 2);
        for (int s = smin; s <= smax; ++s) {
            const Rational& al = a_rational(static_cast<unsigned>(s + 2 - static_cast<int>(d1)));
            Rational inner = 0;
            for (int k1 = 0; 2 * k1 <= s; ++k1) {
                const int k2 = s - k1;
                const Rational& c = *ref(make_key(g - 1, with(with(rest, static_cast<unsigned>(k1)), static_cast<unsigned>(k2))));
                if (k1 == k2) inner += c;
                else inner += 2 * c;
            }
            B += al * inner;
        }
        B *= 16;
    }

    // C: sub-multisets I of rest with weight prod C(mult, chosen). The
    // summand is symmetric under (g1,I) <-> (g2,J), so each unordered pair is
    // visited once and doubled unless it is its own mirror.
    Rational C = 0;
    const int smin = std::max(0, static_cast<int>(d1) - 2);
    std::vector<unsigned> pick(gr.val.size(), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
        if (pos < gr.val.size()) {
            for (unsigned c = 0; c <= gr.mult[pos]; ++c) {
                pick[pos] = c;
                walk(pos + 1);
            }
            return;
        }
        std::vector<unsigned> mirror(gr.val.size());
        for (std::size_t t = 0; t < gr.val.size(); ++t) mirror[t] = gr.mult[t] - pick[t];
        std::string I, J;
        Integer w = 1;
        for (std::size_t t = 0; t < gr.val.size(); ++t) {
            I.append(pick[t], static_cast<char>(gr.val[t]));
            J.append(mirror[t], static_cast<char>(gr.val[t]));
            w *= binomial(gr.mult[t], pick[t]);
        }
        const unsigned nI = static_cast<unsigned>(I.size()) + 1, nJ = static_cast<unsigned>(J.size()) + 1;
        const int wI = static_cast<int>(weight_of(I)), wJ = static_cast<int>(weight_of(J));
        Rational acc = 0;
        for (unsigned g1 = 0; g1 <= g; ++g1) {
            const unsigned g2 = g - g1;
            const auto side = std::make_pair(g1, pick) <=> std::make_pair(g2, mirror);
            if (side > 0) continue;
            if (2 * g1 + nI < 3 || 2 * g2 + nJ < 3) continue;
            const int D1 = 3 * static_cast<int>(g1) - 3 + static_cast<int>(nI) - wI;
            const int D2 = 3 * static_cast<int>(g2) - 3 + static_cast<int>(nJ) - wJ;
            if (D1 < 0 || D2 < 0 || D1 + D2 < smin) continue;
            Integer den1, den2;
            std::vector<Integer> c1 = scaled(I, g1, D1, den1), c2 = scaled(J, g2, D2, den2);
            Rational part = 0;
            Integer conv;
            for (int s = smin; s <= D1 + D2; ++s) {
                conv = 0;
                for (int k1 = std::max(0, s - D2); k1 <= std::min(s, D1); ++k1)
                    mpz_addmul(conv.get_mpz_t(), c1[k1].get_mpz_t(), c2[s - k1].get_mpz_t());
                part += a_rational(static_cast<unsigned>(s + 2 - static_cast<int>(d1))) * conv;
            }
            part /= Rational(den1 * den2);
            if (side < 0) part *= 2;
            acc += part;
        }
        C += acc * Rational(w);
    };
    walk(0);
    C *= 16;

    Rational r = A + B + C;
    r.canonicalize();
    return r;
}

}  // namespace

Rational intersection_coefficient(unsigned g, std::vector<unsigned> d, MemoStore& store) {
    std::sort(d.begin(), d.end(), std::greater<>());
    if (!d.empty() && d.front() > 255) return 0;
    Engine e(store);
    return e.coeff(encode_key(g, d));
}

PiPoly intersection_number(const TauIndex& idx, MemoStore& store) {
    if (!is_stable(idx.g, idx.n())) throw DomainError("unstable index " + to_string(idx));
    const int m = idx.pi_degree();
    if (m < 0) return PiPoly();
    return PiPoly::monomial(intersection_coefficient(idx.g, idx.d, store), static_cast<unsigned>(m));
}

std::vector<std::pair<TauIndex, PiPoly>> base_table() {
    return {
        {TauIndex(0, {0, 0, 0}), PiPoly(1)},
        {TauIndex(1, {0}), PiPoly::monomial(Rational(1, 12), 1)},
        {TauIndex(1, {1}), PiPoly(Rational(1, 2))},
    };
}

}  // namespace wpvol
