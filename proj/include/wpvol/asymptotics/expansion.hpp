#pragma once

#include "wpvol/exact/rational.hpp"

#include <map>
#include <vector>

namespace wpvol {

// A(g) = sum_{t<=k} coeffs[t] / (g-base)^t + R(g),  |R| <= error / (g-base)^(k+1)
// for every g >= g_min. error is an exact upper bound.
struct Expansion {
    int base = 0;
    std::vector<Rational> coeffs;
    Rational error = 0;
    Rational g_min = 1;

    unsigned order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    Rational u_min() const { return g_min - base; }
    // Truncated sum at g.
    Rational partial_sum(const Rational& g) const;
    double error_double() const;  // rounded up
};

// Same function to a lower order: the dropped coefficients move into the
// error term, bounded at g_min.
Expansion truncate(const Expansion& e, unsigned order);

// Cauchy product of the inputs. Every input is first truncated to the
// smallest order present; the error constant bounds each group of the
// product lemma at g_min, with absolute values on the coefficients.
Expansion expansion_product(const std::vector<Expansion>& inputs);

// Product where a1 has vanishing coefficients 0..r. a1 is used to order
// s+r+1 and the other factors to order s, with k-(r+1) <= s <= k where k is
// the smallest order among the others.
Expansion expansion_product_leading_zeros(const Expansion& a1, const std::vector<Expansion>& rest, unsigned r,
                                          unsigned s);

// Coefficient map of the re-expansion of sum a_i/(g-m)^i in powers of 1/g:
// output t is sum_{i=1}^t C(t-1,i-1) m^(t-i) a_i (t >= 1), a_0 unchanged.
// Exact for any integer m, no error term.
std::vector<Rational> shift_coefficients(const std::vector<Rational>& a, long m);

// Default envelope: a~_i = (i-1)! max_{j<=i} |a_j|/(j-1)!, i >= 1.
std::vector<Rational> shift_envelope(const std::vector<Rational>& a);

// Base-m expansion (e.base == m) to base 0 with C' = 3C_k + 3 k^2 e^m a~_k.
// Requires m <= k+1 and (k+1)^3 <= g_min; m = 0 returns e unchanged.
Expansion shift_base(const Expansion& e, unsigned m);
Expansion shift_base(const Expansion& e, unsigned m, const std::vector<Rational>& envelope);

// Coefficient bounds of the Q, P, q, v families: (t_1..t_n) -> bound.
struct ErrorPolynomial {
    unsigned n = 0;
    unsigned degree_cap = 0;
    std::map<std::vector<unsigned>, double> coeffs;
    // Every coefficient <= M / (t_1! ... t_n!).
    bool within_envelope(double M) const;
};

}  // namespace wpvol
