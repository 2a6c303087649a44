#include "wpvol/exact/pi_poly.hpp"

#include "wpvol/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace wpvol {

PiPoly::PiPoly(long c) : c_{Rational(c)} { trim(); }
PiPoly::PiPoly(const Rational& c) : c_{c} { trim(); }
PiPoly::PiPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

PiPoly PiPoly::monomial(const Rational& c, unsigned j) {
    PiPoly p;
    if (c == 0) return p;
    p.c_.assign(j + 1, Rational(0));
    p.c_[j] = c;
    return p;
}

void PiPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

PiPoly& PiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
}

PiPoly PiPoly::operator-() const {
    PiPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

std::string to_json(const PiPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& q : p.coeffs()) a.push_back(to_string(q));
    return a.dump();
}

PiPoly pi_poly_from_json(std::string_view s) {
    nlohmann::json a;
    try {
        a = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed PiPoly: ") + e.what());
    }
    if (!a.is_array()) throw DomainError("PiPoly must be a JSON array");
    std::vector<Rational> c;
    for (const auto& e : a) {
        if (!e.is_string()) throw DomainError("PiPoly entries must be strings");
        c.push_back(parse_rational(e.get<std::string>()));
    }
    return PiPoly(std::move(c));
}

std::string to_pretty(const PiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const Rational& q = p.coeffs()[j];
        if (q == 0) continue;
        std::string term = q.get_str();
        if (j > 0) term += "*pi^" + std::to_string(2 * j);
        if (!out.empty()) out += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
        else out = term;
    }
    return out;
}

}  // namespace wpvol
