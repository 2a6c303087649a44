#pragma once

#include "wpvol/exact/interval.hpp"
#include "wpvol/exact/pi_poly.hpp"
#include "wpvol/intersection/memo_store.hpp"

#include <map>
#include <vector>

namespace wpvol {

// V_{g,n}(x) = sum_d [tau_d] prod (x_i/2)^(2d_i)/(2d_i+1)!
// The polynomial is symmetric, so terms are keyed by the sorted exponent
// multiset d (descending); coefficient() accepts any ordering. The value held
// for d multiplies each monomial prod x_i^(2 d_i).
class VolumePolynomial {
public:
    VolumePolynomial(unsigned g, unsigned n) : g_(g), n_(n) {}

    unsigned g() const { return g_; }
    unsigned n() const { return n_; }
    const std::map<std::vector<unsigned>, PiPoly>& terms() const { return terms_; }
    PiPoly coefficient(std::vector<unsigned> d) const;
    PiPoly constant_term() const { return coefficient(std::vector<unsigned>(n_, 0)); }

    // Exact value at rational lengths; throws DomainError on a negative entry.
    PiPoly at(const std::vector<Rational>& x) const;
    // V(l, ..., l): entry j is the coefficient of l^(2j).
    std::vector<PiPoly> diagonal() const;

    void set(std::vector<unsigned> d_sorted, PiPoly c) { terms_[std::move(d_sorted)] = std::move(c); }

private:
    unsigned g_, n_;
    std::map<std::vector<unsigned>, PiPoly> terms_;
};

VolumePolynomial volume_polynomial(unsigned g, unsigned n, MemoStore& store);

// V_g from the n = 0 instance of the dilaton-type identity
// (2g-2) V_g = 1/2 sum_l (-1)^(l-1) l pi^(2l-2)/(2l+1)! [tau_l]_{g,1}.
PiPoly closed_volume(unsigned g, MemoStore& store);

// V_{g,n}(0): closed_volume for n = 0, [tau_0^n] otherwise.
PiPoly volume(unsigned g, unsigned n, MemoStore& store);

PiPoly volume_at(unsigned g, unsigned n, const std::vector<Rational>& x, MemoStore& store);

// num/den with both parts exact. Ratios of volumes can carry negative powers
// of pi, which Q[pi^2] cannot hold, hence the pair.
struct ExactQuotient {
    PiPoly num, den;
    Interval interval(mpfr_prec_t prec = 128) const { return eval_interval(num, prec) / eval_interval(den, prec); }
    double value() const { return interval(128).mid(); }
};

// 4 pi^2 (2g-2+n) V_{g,n} / V_{g,n+1}
ExactQuotient mz_ratio(unsigned g, unsigned n, MemoStore& store);
// V_{g-1,n+2} / V_{g,n}
ExactQuotient a4_ratio(unsigned g, unsigned n, MemoStore& store);

// W_r = V_{r/2+1} for even r, V_{(r+1)/2,1} for odd r.
PiPoly w_r(unsigned r, MemoStore& store);

// Coefficient list of a univariate PiPoly-valued polynomial divided by a
// homogeneous PiPoly, as doubles (index j multiplies l^(2j)).
std::vector<double> normalized_doubles(const std::vector<PiPoly>& poly, const PiPoly& by);

}  // namespace wpvol
