#pragma once

#include "wpvol/cli/config.hpp"
#include "wpvol/cli/report.hpp"
#include "wpvol/intersection/memo_store.hpp"

#include <string>
#include <vector>

namespace wpvol {

struct SuiteOptions {
    unsigned max_complexity = 8;     // recursions
    unsigned bound_complexity = 10;  // sandwich and vanishing
    std::string expansion_suite;     // a3 | a4 | wpvols | corollary | algebra | empty for all
};

// recursions | bounds | mz | expansions | spectral | all. Throws DomainError
// on an unknown name.
Report run_suite(const std::string& name, const Config& cfg, const SuiteOptions& opt, MemoStore& store);

// Header: g,n,complexity,pi2_degree,coefficient,value,mz_ratio
std::vector<std::string> volume_table(unsigned max_complexity, const Config& cfg, MemoStore& store);

// a0 and a1 for t in [t_lo, t_hi]; rel_tol bounds the disagreement of the two
// quadrature routes before NumericError is thrown.
nlohmann::json trace_coefficients(unsigned t_lo, unsigned t_hi, double rel_tol = 1e-8);

}  // namespace wpvol
