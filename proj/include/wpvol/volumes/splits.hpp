#pragma once

#include "wpvol/exact/rational.hpp"
#include "wpvol/intersection/memo_store.hpp"
#include "wpvol/volumes/volumes.hpp"

#include <vector>

namespace wpvol {

// One element of the split set: q blocks partitioning {1..n0}, block i with
// genus genera[i]. Blocks are ordered by their smallest label.
struct SplitIndex {
    std::vector<unsigned> genera;
    std::vector<std::vector<unsigned>> blocks;
    unsigned q() const { return static_cast<unsigned>(blocks.size()); }
    friend auto operator<=>(const SplitIndex&, const SplitIndex&) = default;
};

// All splits with 2g_i + n_i - 2 >= 1 and sum (2g_i - 2 + n_i) = 2g - 2g0 - n0.
// Requires 2g0 + n0 >= 3 or (g0,n0) = (0,2), and g > g0.
std::vector<SplitIndex> enumerate_splits(unsigned g, unsigned g0, unsigned n0);

// x_1...x_n0 V_{g0,n0}(x)/V_g sum over splits of prod V_{g_i,n_i}(x^(i)),
// with V_{0,2} := 1 for the cylinder.
ExactQuotient phi(unsigned g, unsigned g0, unsigned n0, const std::vector<Rational>& x, MemoStore& store);

}  // namespace wpvol
