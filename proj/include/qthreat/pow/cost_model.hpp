#pragma once

#include <optional>

#include "qthreat/pow/momentum.hpp"

namespace qthreat::pow {

// Work estimates for one Momentum parameterization, in hash-evaluation units.
struct CostModelReport {
    double m;                    // expected headers tried, max(1, 2^(n+ell)/(t*|S|^2))
    double classical_time;       // m * |S|
    double optimal_subset;       // sqrt(2^(n+ell)/t), the |S| minimizing time
    double optimal_time;         // T = sqrt(2^(n+ell)/t)
    double quantum_lower_bound;  // sqrt(m) * |S|^(2/3)
    // 2^(n+ell+1)/(t*|S|), only meaningful below the optimal subset size.
    std::optional<double> memory_limited_time;
};

CostModelReport classical_cost_model(const MomentumParams& params);

// Quantum collision lower bound for the same search: sqrt(m) * |S|^(2/3).
// Equals T^(2/3) at the classically optimal subset size.
double quantum_cost_model(const MomentumParams& params);

}  // namespace qthreat::pow
