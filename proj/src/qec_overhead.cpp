#include "qthreat/qec_overhead.hpp"

#include <cmath>
#include <stdexcept>

namespace qthreat::qec {

namespace {

// log of the per-cycle error bound, monotone decreasing for d past the small
// hump at d = -2/ln(100*p_g).
double log_bound(double d, double p_g) {
    return std::log(192.0 * d) + 0.5 * (d + 1.0) * std::log(100.0 * p_g);
}

// Real-valued distance with logical_error_per_cycle(d, p_g) == target,
// taken on the decreasing branch. Bisection on the log of the bound,
// absolute tolerance 1e-9 on d.
double solve_distance(double target, double p_g) {
    const double log_target = std::log(target);
    double lo = std::max(1.0, -2.0 / std::log(100.0 * p_g));
    if (log_bound(lo, p_g) <= log_target) return lo;
    double hi = 2.0 * lo;
    while (log_bound(hi, p_g) > log_target) hi *= 2.0;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (log_bound(mid, p_g) > log_target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Smallest integer distance satisfying the bound; scans upward so the
// non-monotone region near d = 1 is handled exactly.
double smallest_integer_distance(double target, double p_g) {
    const double log_target = std::log(target);
    for (int d = 1;; ++d) {
        if (log_bound(static_cast<double>(d), p_g) <= log_target) return static_cast<double>(d);
    }
}

}  // namespace

PhysicalGateModel::PhysicalGateModel(double gate_error_rate) : p_g(gate_error_rate) {
    if (!(p_g > 0.0) || !(p_g < 0.01))
        throw std::invalid_argument("gate error rate must lie in (0, 0.01)");
}

LogicalCircuitProfile::LogicalCircuitProfile(double t_count, double clifford_count,
                                             double logical_qubits)
    : n_t(t_count), n_c(clifford_count), n_l(logical_qubits) {
    if (n_t < 1.0 || n_c < 1.0 || n_l < 1.0)
        throw std::invalid_argument("circuit profile counts must be >= 1");
}

double logical_error_per_cycle(double d, double p_g) {
    if (!(d > 0.0)) throw std::invalid_argument("code distance must be positive");
    if (!(p_g > 0.0)) throw std::invalid_argument("gate error rate must be positive");
    return 192.0 * d * std::pow(100.0 * p_g, 0.5 * (d + 1.0));
}

FactoryPlan plan_distillation(const PhysicalGateModel& model, double n_t, DistanceMode mode) {
    if (n_t < 1.0) throw std::invalid_argument("T-gate count must be >= 1");
    const double p_g = model.p_g;

    FactoryPlan plan;
    double p_tol = 1.0 / n_t;
    double distance_sum = 0.0;
    while (p_tol < 10.0 * p_g) {
        const double d = mode == DistanceMode::RealValued
                             ? solve_distance(p_tol / 2.0, p_g)
                             : smallest_integer_distance(p_tol / 2.0, p_g);
        plan.schedule.distances.push_back(d);
        distance_sum += d;
        p_tol = std::cbrt(p_tol / 70.0);
    }
    plan.c_tau = 10.0 * distance_sum;
    plan.tau = n_t * plan.c_tau;
    if (plan.schedule.distances.empty()) {
        plan.q_factory = 0.0;
    } else {
        const double d_last = plan.schedule.distances.back();
        plan.q_factory = 50.0 * d_last * d_last *
                         std::pow(15.0, static_cast<double>(plan.schedule.layers() - 1));
    }
    return plan;
}

double circuit_code_distance(const PhysicalGateModel& model, double n_c, DistanceMode mode) {
    if (n_c < 1.0) throw std::invalid_argument("Clifford count must be >= 1");
    const double base = 80.0 * model.p_g;
    if (base >= 1.0) throw std::invalid_argument("gate error rate must be below 1/80");

    // (80 p_g)^((d+1)/2) <= 1/n_C, pure exponential in d.
    const double log_target = -std::log(n_c);
    const double real_d = 2.0 * log_target / std::log(base) - 1.0;
    if (mode == DistanceMode::RealValued) return std::max(1.0, real_d);
    return std::max(1.0, std::ceil(real_d - 1e-12));
}

OverheadResult overheads(const PhysicalGateModel& model, const LogicalCircuitProfile& profile,
                         DistanceMode mode, QubitFormula formula) {
    const FactoryPlan factory = plan_distillation(model, profile.n_t, mode);
    const double d_c = circuit_code_distance(model, profile.n_c, mode);

    OverheadResult result;
    result.schedule = factory.schedule;
    result.c_tau = factory.c_tau;
    result.tau = factory.tau;
    result.q_factory = factory.q_factory;
    result.d_c = d_c;
    result.q_circuit = formula == QubitFormula::Linear ? 3.125 * profile.n_l * d_c
                                                       : 3.125 * profile.n_l * d_c * d_c;
    result.n_q = result.q_factory + result.q_circuit;
    result.c_nq = result.n_q / profile.n_l;
    return result;
}

}  // namespace qthreat::qec
