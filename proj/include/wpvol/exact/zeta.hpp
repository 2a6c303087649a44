#pragma once

#include "wpvol/exact/pi_poly.hpp"
#include "wpvol/exact/rational.hpp"

namespace wpvol {

// B_n with B_1 = -1/2. Memoized, thread-safe.
Rational bernoulli(unsigned n);

// zeta(2i) as c * pi^(2i).
PiPoly zeta_even(unsigned i);

// a_i = (1 - 2^(1-2i)) zeta(2i), a_0 = 1/2.
PiPoly a_coeff(unsigned i);
// Rational factor alpha_i with a_i = alpha_i pi^(2i).
const Rational& a_rational(unsigned i);

}  // namespace wpvol
