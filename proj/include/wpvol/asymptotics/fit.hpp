#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wpvol {

struct FitReport {
    std::vector<double> coeffs;     // c_0..c_k in powers of 1/g
    std::vector<double> residuals;  // value - fit, per sample
    double condition_number = 0;
    // Decay exponent p of the sliding-window c_0 estimates, |delta| ~ g^-(p+1);
    // a model that holds to order k gives p close to k+1. NaN if undetermined.
    double residual_exponent = 0;
    std::string warning;  // set when the design is ill-conditioned
};

// Least squares on (g, value) pairs; needs at least k+3 distinct g.
FitReport fit_expansion(const std::vector<std::pair<double, double>>& samples, unsigned k);

// g |r_g - target| over the samples and whether max/min stays within factor.
struct EnvelopeCheck {
    std::vector<double> scaled;  // g |r - target|
    double spread = 0;           // max/min of scaled
    bool holds = false;
};
EnvelopeCheck envelope_check(const std::vector<std::pair<double, double>>& samples, double target, double factor = 3);

}  // namespace wpvol
