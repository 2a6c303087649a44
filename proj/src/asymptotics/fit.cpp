#include "wpvol/asymptotics/fit.hpp"

#include "wpvol/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace wpvol {

namespace {

Eigen::MatrixXd design(const std::vector<std::pair<double, double>>& s, std::size_t from, std::size_t count,
                       unsigned k) {
    Eigen::MatrixXd X(count, k + 1);
    for (std::size_t i = 0; i < count; ++i) {
        double p = 1;
        for (unsigned j = 0; j <= k; ++j) {
            X(i, j) = p;
            p /= s[from + i].first;
        }
    }
    return X;
}

}  // namespace

FitReport fit_expansion(const std::vector<std::pair<double, double>>& samples, unsigned k) {
    std::vector<std::pair<double, double>> s = samples;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end(), [](auto& a, auto& b) { return a.first == b.first; }), s.end());
    if (s.size() < k + 3) throw DomainError("fit_expansion needs at least k+3 distinct sample points");
    for (auto& p : s)
        if (!(p.first > 0)) throw DomainError("fit_expansion needs positive g");

    const std::size_t N = s.size();
    Eigen::MatrixXd X = design(s, 0, N, k);
    Eigen::VectorXd y(N);
    for (std::size_t i = 0; i < N; ++i) y(i) = s[i].second;

    FitReport rep;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(X);
    const auto& sv = svd.singularValues();
    rep.condition_number = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
    if (rep.condition_number > 1e10) rep.warning = "ill-conditioned design matrix";

    Eigen::VectorXd c = X.colPivHouseholderQr().solve(y);
    rep.coeffs.assign(c.data(), c.data() + c.size());
    Eigen::VectorXd res = y - X * c;
    rep.residuals.assign(res.data(), res.data() + res.size());

    // Interpolate k+1 consecutive points, track how the constant term settles.
    std::vector<double> lg, ld;
    double prev = 0;
    for (std::size_t j = 0; j + k + 1 <= N; ++j) {
        Eigen::MatrixXd W = design(s, j, k + 1, k);
        Eigen::VectorXd w = y.segment(j, k + 1);
        double c0 = W.fullPivLu().solve(w)(0);
        if (j > 0 && c0 != prev) {
            lg.push_back(std::log(s[j].first));
            ld.push_back(std::log(std::abs(c0 - prev)));
        }
        prev = c0;
    }
    if (lg.size() >= 2) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < lg.size(); ++i) {
            mx += lg[i];
            my += ld[i];
        }
        mx /= lg.size();
        my /= lg.size();
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < lg.size(); ++i) {
            sxy += (lg[i] - mx) * (ld[i] - my);
            sxx += (lg[i] - mx) * (lg[i] - mx);
        }
        rep.residual_exponent = sxx > 0 ? -sxy / sxx - 1 : std::numeric_limits<double>::quiet_NaN();
    } else {
        rep.residual_exponent = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

EnvelopeCheck envelope_check(const std::vector<std::pair<double, double>>& samples, double target, double factor) {
    EnvelopeCheck out;
    if (samples.empty()) return out;
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (auto& [g, r] : samples) {
        double v = g * std::abs(r - target);
        out.scaled.push_back(v);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    out.spread = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
    out.holds = out.spread <= factor;
    return out;
}

}  // namespace wpvol
