#pragma once

#include "wpvol/exact/rational.hpp"

#include <vector>

namespace wpvol {

struct TailZetaBound {
    unsigned r = 0;
    unsigned terms = 0;        // partial sum runs over i = 1..terms
    double partial_lo = 0;     // enclosure of the partial sum
    double partial_hi = 0;
    double tail = 0;           // rigorous bound on the rest, from |a_{i+1}-a_i| < 4^-i
    double bound = 0;          // partial_hi + tail
    double claim = 0;          // 2 r!
    bool holds = false;        // bound <= claim
};

// sum_{i>=1} (a_{i+1} - a_i) i^r.
TailZetaBound tail_zeta_bound(unsigned r);

struct CoeffProductBound {
    Integer lhs, rhs;
    bool holds = false;
};

// prod_q sum_{p=1}^{t_q} C(t_q-1,p-1) b^(t_q-p) (c t_q)^(c p) <= (c sum t + b)^(c sum t),
// in exact integers. b, c must be integers > 1.
CoeffProductBound coeff_product_bound(const std::vector<unsigned>& t, unsigned b, unsigned c);

}  // namespace wpvol
