#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wpvol {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// as long as every constructor path ends in canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" always, including q = 1.
std::string to_string(const Rational& q);
// Accepts "p/q" and bare "p". Throws DomainError on junk or zero denominator.
Rational parse_rational(std::string_view s);

Integer factorial(unsigned n);
Integer double_factorial(int n);  // (-1)!! = 1
Integer binomial(unsigned n, unsigned k);

}  // namespace wpvol
