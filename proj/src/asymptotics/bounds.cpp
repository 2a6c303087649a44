#include "wpvol/asymptotics/bounds.hpp"

#include "wpvol/errors.hpp"
#include "wpvol/exact/interval.hpp"
#include "wpvol/exact/zeta.hpp"

#include <cmath>

namespace wpvol {

TailZetaBound tail_zeta_bound(unsigned r) {
    constexpr mpfr_prec_t prec = 512;
    TailZetaBound out;
    out.r = r;
    out.terms = 2 * r + 100;
    Interval sum(Rational(0), prec);
    for (unsigned i = 1; i <= out.terms; ++i) {
        Interval d = eval_interval(a_coeff(i + 1) - a_coeff(i), prec);
        sum += d * Interval(Rational(Integer(i)), prec).pow(r);
    }
    out.partial_lo = sum.lo_down();
    out.partial_hi = sum.hi_up();
    // a_i = eta(2i) = 1 - 4^-i + 9^-i - ..., so 0 < a_{i+1} - a_i <= 1 - a_i <= 4^-i.
    // Past I >= 2r consecutive terms i^r 4^-i shrink by at least e^(1/2)/4 < 1/2.
    const double I1 = out.terms + 1.0;
    out.tail = 2 * std::exp(r * std::log(I1) - I1 * std::log(4.0)) * (1 + 1e-9);
    out.bound = out.partial_hi + out.tail;
    out.claim = 2 * std::tgamma(r + 1.0);
    out.holds = out.bound <= out.claim;
    return out;
}

CoeffProductBound coeff_product_bound(const std::vector<unsigned>& t, unsigned b, unsigned c) {
    if (b < 2 || c < 2) throw DomainError("coeff_product_bound needs integers b, c > 1");
    CoeffProductBound out;
    out.lhs = 1;
    unsigned total = 0;
    for (unsigned tq : t) {
        if (tq == 0) throw DomainError("coeff_product_bound needs t_q >= 1");
        total += tq;
        Integer s = 0;
        for (unsigned p = 1; p <= tq; ++p) {
            Integer bp, cp;
            mpz_ui_pow_ui(bp.get_mpz_t(), b, tq - p);
            mpz_ui_pow_ui(cp.get_mpz_t(), static_cast<unsigned long>(c) * tq, static_cast<unsigned long>(c) * p);
            s += binomial(tq - 1, p - 1) * bp * cp;
        }
        out.lhs *= s;
    }
    mpz_ui_pow_ui(out.rhs.get_mpz_t(), static_cast<unsigned long>(c) * total + b, static_cast<unsigned long>(c) * total);
    out.holds = out.lhs <= out.rhs;
    return out;
}

}  // namespace wpvol
