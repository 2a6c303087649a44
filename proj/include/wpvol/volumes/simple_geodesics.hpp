#pragma once

#include "wpvol/intersection/memo_store.hpp"
#include "wpvol/numeric/quadrature.hpp"

#include <functional>
#include <vector>

namespace wpvol {

// Weight w(l) with E_simple = int_0^L w(l) F(l) l dl:
//   w = [V_{g-1,2}(l,l) + sum_{i=1}^{floor(g/2)} V_{i,1}(l) V_{g-i,1}(l)] / V_g.
// Entry j multiplies l^(2j).
std::vector<double> simple_weight(unsigned g, MemoStore& store);

// The separating sum alone, same layout.
std::vector<double> separating_weight(unsigned g, MemoStore& store);

double eval_even_poly(const std::vector<double>& c, double l);

QuadResult simple_expectation(unsigned g, const std::function<double(double)>& F, double L, MemoStore& store);

// int_0^L 4 sinh(l/2)^2 / l F(l) dl
QuadResult simple_leading_integral(const std::function<double(double)>& F, double L);

}  // namespace wpvol
