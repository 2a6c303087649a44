#include "wpvol/exact/interval.hpp"

#include "wpvol/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace wpvol {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.prec_) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_double(double x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_d(r.lo_, x, MPFR_RNDD);
    mpfr_set_d(r.hi_, x, MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

double Interval::lo_down() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_up() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Interval::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(double x) const { return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0; }

bool Interval::subset_of(const Interval& o) const {
    return mpfr_cmp(o.lo_, lo_) <= 0 && mpfr_cmp(hi_, o.hi_) <= 0;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

Interval& Interval::operator+=(const Interval& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator-=(const Interval& o) {
    // o may alias *this; read o.hi before lo is overwritten.
    Interval t(o);
    mpfr_sub(lo_, lo_, t.hi_, MPFR_RNDD);
    mpfr_sub(hi_, hi_, t.lo_, MPFR_RNDU);
    return *this;
}

namespace {

// lo/hi of {a1,a2} x {b1,b2} with the given per-product operation.
template <class Op>
void corner_extrema(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr a1, mpfr_srcptr a2, mpfr_srcptr b1,
                    mpfr_srcptr b2, mpfr_prec_t prec, Op op) {
    mpfr_t d, u;
    mpfr_init2(d, prec);
    mpfr_init2(u, prec);
    mpfr_srcptr as[2] = {a1, a2};
    mpfr_srcptr bs[2] = {b1, b2};
    bool first = true;
    mpfr_t l, h;
    mpfr_init2(l, prec);
    mpfr_init2(h, prec);
    for (auto a : as)
        for (auto b : bs) {
            op(d, a, b, MPFR_RNDD);
            op(u, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(d, l) < 0) mpfr_set(l, d, MPFR_RNDD);
            if (first || mpfr_cmp(u, h) > 0) mpfr_set(h, u, MPFR_RNDU);
            first = false;
        }
    mpfr_set(lo, l, MPFR_RNDD);
    mpfr_set(hi, h, MPFR_RNDU);
    mpfr_clears(d, u, l, h, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

Interval& Interval::operator*=(const Interval& o) {
    Interval t(o);
    Interval s(*this);
    corner_extrema(lo_, hi_, s.lo_, s.hi_, t.lo_, t.hi_, prec_,
                   [](mpfr_ptr r, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t m) { mpfr_mul(r, a, b, m); });
    return *this;
}

Interval& Interval::operator/=(const Interval& o) {
    if (o.contains_zero()) throw NumericError("interval division by an interval containing zero");
    Interval t(o);
    Interval s(*this);
    corner_extrema(lo_, hi_, s.lo_, s.hi_, t.lo_, t.hi_, prec_,
                   [](mpfr_ptr r, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t m) { mpfr_div(r, a, b, m); });
    return *this;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw DomainError("interval sqrt of a possibly negative value");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pow(unsigned k) const {
    Interval r(Rational(1), prec_);
    Interval b(*this);
    while (k) {
        if (k & 1u) r *= b;
        k >>= 1u;
        if (k) b *= b;
    }
    return r;
}

Interval Interval::rounded_to(mpfr_prec_t prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

namespace {

std::string endpoint_string(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "R" + (rnd == MPFR_RNDD ? "D" : "U") + "e";
    mpfr_asprintf(&buf, fmt.c_str(), x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

}  // namespace

std::string Interval::lo_string(int digits) const { return endpoint_string(lo_, digits, MPFR_RNDD); }
std::string Interval::hi_string(int digits) const { return endpoint_string(hi_, digits, MPFR_RNDU); }

// * pi = 16 atan(1/5) - 4 atan(1/239)
// * atan(1/x) in fixed point 2^P: every term is an exact floor, so each one
// * is low by less than one unit; the alternating tail is below the first
// * omitted term, itself below one unit once the loop stops.
namespace {

Integer atan_inv_fixed(unsigned long x, mp_bitcnt_t bits, unsigned long& terms) {
    Integer scale = Integer(1) << bits;
    Integer power = scale / x;
    Integer x2 = Integer(x) * x;
    Integer sum = 0;
    terms = 0;
    for (unsigned long k = 0; power != 0; ++k) {
        Integer term = power / (2 * k + 1);
        if (k % 2 == 0) sum += term;
        else sum -= term;
        power /= x2;
        ++terms;
    }
    return sum;
}

Interval machin_pi(mpfr_prec_t prec) {
    const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(prec) + 64;
    unsigned long n5 = 0, n239 = 0;
    Integer a5 = atan_inv_fixed(5, bits, n5);
    Integer a239 = atan_inv_fixed(239, bits, n239);
    Integer center = 16 * a5 - 4 * a239;
    Integer err = 16 * (n5 + 1) + 4 * (n239 + 1) + 1;
    Integer den = Integer(1) << bits;
    Rational qlo(center - err, den), qhi(center + err, den);
    qlo.canonicalize();
    qhi.canonicalize();
    Interval lo(qlo, prec + 64);
    Interval hi(qhi, prec + 64);
    return Interval::hull(lo, hi).rounded_to(prec);
}

}  // namespace

const Interval& pi_interval(mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<mpfr_prec_t, std::unique_ptr<Interval>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[prec];
    if (!slot) slot = std::make_unique<Interval>(machin_pi(prec));
    return *slot;
}

Interval eval_interval(const PiPoly& v, mpfr_prec_t prec) {
    if (prec < 32) throw DomainError("precision must be at least 32 bits");
    if (v.is_zero()) return Interval(prec);
    const mpfr_prec_t work = prec + 64;
    Interval pi2 = pi_interval(work);
    pi2 *= pi_interval(work);
    // Horner in pi^2; pi^2 > 0 so products stay well ordered.
    const auto& c = v.coeffs();
    Interval acc(c.back(), work);
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        acc *= pi2;
        acc += Interval(c[j], work);
    }
    return acc.rounded_to(prec);
}

std::strong_ordering compare(const PiPoly& u, const PiPoly& v, mpfr_prec_t max_prec) {
    if (u == v) return std::strong_ordering::equal;
    PiPoly diff = u - v;
    if (diff.degree() == 0)
        return diff.coeff(0) > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    for (mpfr_prec_t p = 64; p <= max_prec; p *= 2) {
        Interval d = eval_interval(diff, p);
        if (d.certainly_positive()) return std::strong_ordering::greater;
        if (d.certainly_negative()) return std::strong_ordering::less;
    }
    throw NumericError("compare: difference not resolved at " + std::to_string(max_prec) + " bits");
}

}  // namespace wpvol
