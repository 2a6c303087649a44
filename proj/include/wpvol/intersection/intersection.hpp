#pragma once

#include "wpvol/exact/pi_poly.hpp"
#include "wpvol/intersection/memo_store.hpp"
#include "wpvol/intersection/tau_index.hpp"

#include <utility>
#include <vector>

namespace wpvol {

// [tau_d1 ... tau_dn]_{g,n} in the normalization
// 2^(2|d|) prod (2d_i+1)!! / m! * int psi^d omega^m, m = 3g-3+n-|d|.
PiPoly intersection_number(const TauIndex& idx, MemoStore& store);

// Rational r with [tau_d]_{g,n} = r * pi^(2m). Zero outside the dimension
// range and for unstable (g,n), so it can be used inside sums.
Rational intersection_coefficient(unsigned g, std::vector<unsigned> d, MemoStore& store);

// The three seeds of the recursion.
std::vector<std::pair<TauIndex, PiPoly>> base_table();

}  // namespace wpvol
