#pragma once

#include "wpvol/exact/pi_poly.hpp"
#include "wpvol/exact/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>

namespace wpvol {

// Closed interval [lo, hi] with MPFR endpoints rounded outward.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(const Rational& q, mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o) noexcept;
    ~Interval();

    static Interval from_double(double x, mpfr_prec_t prec);
    static Interval hull(const Interval& a, const Interval& b);

    mpfr_prec_t precision() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    double lo_down() const;  // largest double <= lo
    double hi_up() const;    // smallest double >= hi
    double mid() const;
    double width() const;

    bool contains(const Rational& q) const;
    bool contains(double x) const;
    bool subset_of(const Interval& o) const;
    bool certainly_positive() const;
    bool certainly_negative() const;
    bool contains_zero() const;

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);  // throws NumericError if o contains 0
    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
    friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
    Interval operator-() const;

    Interval exp() const;
    Interval sqrt() const;  // requires lo >= 0
    Interval pow(unsigned k) const;

    // Round outward to fewer bits.
    Interval rounded_to(mpfr_prec_t prec) const;

    std::string lo_string(int digits = 20) const;
    std::string hi_string(int digits = 20) const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

// Enclosure of pi, Machin series in fixed-point integers; cached per precision.
const Interval& pi_interval(mpfr_prec_t prec);

// Enclosure of sum_j c_j pi^(2j); result width shrinks as prec grows.
Interval eval_interval(const PiPoly& v, mpfr_prec_t prec);

// Equality by coefficients, strict order by interval refinement from 64 bits,
// doubling up to max_prec; throws NumericError beyond the cap.
std::strong_ordering compare(const PiPoly& u, const PiPoly& v, mpfr_prec_t max_prec = 16384);

}  // namespace wpvol
