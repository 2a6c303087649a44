#include "wpvol/volumes/simple_geodesics.hpp"

#include "wpvol/errors.hpp"
#include "wpvol/volumes/volumes.hpp"

#include <cmath>

namespace wpvol {

namespace {

std::vector<PiPoly> mul(const std::vector<PiPoly>& a, const std::vector<PiPoly>& b) {
    std::vector<PiPoly> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void add_into(std::vector<PiPoly>& acc, const std::vector<PiPoly>& b) {
    if (acc.size() < b.size()) acc.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) acc[i] += b[i];
}

std::vector<PiPoly> separating_exact(unsigned g, MemoStore& store) {
    std::vector<PiPoly> acc;
    for (unsigned i = 1; i <= g / 2; ++i)
        add_into(acc, mul(volume_polynomial(i, 1, store).diagonal(), volume_polynomial(g - i, 1, store).diagonal()));
    return acc;
}

}  // namespace

std::vector<double> separating_weight(unsigned g, MemoStore& store) {
    if (g < 2) throw DomainError("simple-geodesic weights need g >= 2");
    return normalized_doubles(separating_exact(g, store), closed_volume(g, store));
}

std::vector<double> simple_weight(unsigned g, MemoStore& store) {
    if (g < 2) throw DomainError("simple-geodesic weights need g >= 2");
    std::vector<PiPoly> acc = volume_polynomial(g - 1, 2, store).diagonal();
    add_into(acc, separating_exact(g, store));
    return normalized_doubles(acc, closed_volume(g, store));
}

double eval_even_poly(const std::vector<double>& c, double l) {
    const double y = l * l;
    double s = 0;
    for (std::size_t j = c.size(); j-- > 0;) s = s * y + c[j];
    return s;
}

QuadResult simple_expectation(unsigned g, const std::function<double(double)>& F, double L, MemoStore& store) {
    const auto w = simple_weight(g, store);
    return integrate([&](double l) { return eval_even_poly(w, l) * F(l) * l; }, 0.0, L, 1e-10);
}

QuadResult simple_leading_integral(const std::function<double(double)>& F, double L) {
    return integrate(
        [&](double l) {
            if (l == 0) return 0.0;
            const double s = std::sinh(0.5 * l);
            return 4 * s * s / l * F(l);
        },
        0.0, L, 1e-10);
}

}  // namespace wpvol
