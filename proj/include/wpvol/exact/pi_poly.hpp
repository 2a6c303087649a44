#pragma once

#include "wpvol/exact/rational.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace wpvol {

// Element of Q[pi^2]; coeffs[j] multiplies pi^(2j).
class PiPoly {
public:
    PiPoly() = default;
    PiPoly(long c);  // NOLINT(google-explicit-constructor)
    PiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit PiPoly(std::vector<Rational> coeffs);

    // c * pi^(2j)
    static PiPoly monomial(const Rational& c, unsigned j);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(unsigned j) const { return j < c_.size() ? c_[j] : Rational(0); }

    PiPoly& operator+=(const PiPoly& o);
    PiPoly& operator-=(const PiPoly& o);
    PiPoly& operator*=(const PiPoly& o);
    PiPoly& operator*=(const Rational& s);

    friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
    friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
    friend PiPoly operator*(PiPoly a, const PiPoly& b) { return a *= b; }
    friend PiPoly operator*(PiPoly a, const Rational& s) { return a *= s; }
    friend PiPoly operator*(const Rational& s, PiPoly a) { return a *= s; }
    PiPoly operator-() const;

    // Symbolic, coefficient-wise.
    friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

// JSON array of "p/q" strings, index = power of pi^2.
std::string to_json(const PiPoly& p);
PiPoly pi_poly_from_json(std::string_view s);
// Human form, e.g. "43/2160*pi^6".
std::string to_pretty(const PiPoly& p);

}  // namespace wpvol
