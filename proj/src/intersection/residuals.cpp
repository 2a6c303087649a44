#include "wpvol/intersection/residuals.hpp"

#include "wpvol/exact/zeta.hpp"
#include "wpvol/intersection/intersection.hpp"
#include "wpvol/intersection/tau_index.hpp"

namespace wpvol {

namespace {

// Intersection number as a PiPoly; unstable or out-of-range -> 0.
PiPoly tau(int g, std::vector<unsigned> d, MemoStore& store) {
    if (g < 0 || !is_stable(static_cast<unsigned>(g), static_cast<unsigned>(d.size()))) return PiPoly();
    return intersection_number(TauIndex(static_cast<unsigned>(g), std::move(d)), store);
}

std::vector<unsigned> join(std::vector<unsigned> a, std::initializer_list<unsigned> extra) {
    a.insert(a.end(), extra);
    return a;
}

// Subsets of {0..n-1} by bitmask; no multiset symmetry, on purpose.
template <class Fn>
void for_each_split(const std::vector<unsigned>& d, Fn&& fn) {
    const unsigned n = static_cast<unsigned>(d.size());
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<unsigned> I, J;
        for (unsigned i = 0; i < n; ++i) ((mask >> i) & 1ul ? I : J).push_back(d[i]);
        fn(I, J);
    }
}

}  // namespace

PiPoly recursion_iii_residual(unsigned g, const std::vector<unsigned>& d, MemoStore& store) {
    const int n = static_cast<int>(d.size());
    PiPoly lhs = tau(static_cast<int>(g), d, store) * Rational(2 * static_cast<int>(g) - 2 + n);
    PiPoly rhs;
    const int lmax = 3 * static_cast<int>(g) - 2 + n;
    for (int l = 1; l <= lmax; ++l) {
        Rational c(l, 1);
        c /= Rational(factorial(static_cast<unsigned>(2 * l + 1)));
        if (l % 2 == 0) c = -c;
        rhs += PiPoly::monomial(c, static_cast<unsigned>(l - 1)) * tau(static_cast<int>(g), join(d, {static_cast<unsigned>(l)}), store);
    }
    rhs *= Rational(1, 2);
    return lhs - rhs;
}

PiPoly recursion_i_residual(unsigned g, const std::vector<unsigned>& d, MemoStore& store) {
    const int G = static_cast<int>(g);
    PiPoly lhs = tau(G, join(d, {0, 1}), store);
    PiPoly rhs = tau(G - 1, join(d, {0, 0, 0, 0}), store);
    PiPoly split;
    for_each_split(d, [&](const std::vector<unsigned>& I, const std::vector<unsigned>& J) {
        for (int g1 = 0; g1 <= G; ++g1)
            split += tau(g1, join(I, {0, 0}), store) * tau(G - g1, join(J, {0, 0}), store);
    });
    rhs += split * Rational(6);
    return lhs - rhs;
}

PiPoly recursion_ii_residual(unsigned g, const std::vector<unsigned>& d, unsigned l, MemoStore& store) {
    const int G = static_cast<int>(g);
    PiPoly lhs = tau(G, join(d, {0, 0, l + 1}), store);
    PiPoly rhs = tau(G - 1, join(d, {0, 0, 0, 0, l}), store);
    PiPoly s8, s4;
    for_each_split(d, [&](const std::vector<unsigned>& I, const std::vector<unsigned>& J) {
        for (int g1 = 0; g1 <= G; ++g1) {
            s8 += tau(g1, join(I, {0, 0, l}), store) * tau(G - g1, join(J, {0, 0}), store);
            s4 += tau(g1, join(I, {0, l}), store) * tau(G - g1, join(J, {0, 0, 0}), store);
        }
    });
    rhs += s8 * Rational(8) + s4 * Rational(4);
    return lhs - rhs;
}

}  // namespace wpvol
