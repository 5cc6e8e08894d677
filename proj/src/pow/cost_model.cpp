#include "qthreat/pow/cost_model.hpp"

#include <cmath>

namespace qthreat::pow {

CostModelReport classical_cost_model(const MomentumParams& params) {
    const double space = std::ldexp(1.0, params.n + params.ell);  // 2^(n+ell)
    const double t = static_cast<double>(params.target);
    const double subset = static_cast<double>(params.subset_size());

    CostModelReport report;
    report.m = std::max(1.0, space / (t * subset * subset));
    report.classical_time = report.m * subset;
    report.optimal_subset = std::sqrt(space / t);
    report.optimal_time = report.optimal_subset;
    report.quantum_lower_bound = std::sqrt(report.m) * std::pow(subset, 2.0 / 3.0);
    if (subset < report.optimal_subset)
        report.memory_limited_time = 2.0 * space / (t * subset);
    return report;
}

double quantum_cost_model(const MomentumParams& params) {
    return classical_cost_model(params).quantum_lower_bound;
}

}  // namespace qthreat::pow
