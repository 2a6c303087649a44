#pragma once

#include "wpvol/exact/pi_poly.hpp"
#include "wpvol/intersection/memo_store.hpp"

#include <vector>

namespace wpvol {

// Each returns LHS - RHS of an identity among intersection numbers, evaluated
// in full PiPoly arithmetic. All three are identically zero.

// (2g-2+n)[prod tau_d]_{g,n} = 1/2 sum_l (-1)^(l-1) l pi^(2l-2)/(2l+1)! [tau_l prod tau_d]_{g,n+1}
PiPoly recursion_iii_residual(unsigned g, const std::vector<unsigned>& d, MemoStore& store);

// [tau_0 tau_1 prod]_{g,n+2} = [tau_0^4 prod]_{g-1,n+4}
//   + 6 sum_{g1+g2=g, I+J={1..n}} [tau_0^2 prod_I]_{g1} [tau_0^2 prod_J]_{g2}
PiPoly recursion_i_residual(unsigned g, const std::vector<unsigned>& d, MemoStore& store);

// [tau_0^2 tau_{l+1} prod]_{g,n+3} = [tau_0^4 tau_l prod]_{g-1,n+5}
//   + 8 sum [tau_0^2 tau_l prod_I][tau_0^2 prod_J] + 4 sum [tau_0 tau_l prod_I][tau_0^3 prod_J]
PiPoly recursion_ii_residual(unsigned g, const std::vector<unsigned>& d, unsigned l, MemoStore& store);

}  // namespace wpvol
