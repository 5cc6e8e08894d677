#pragma once

#include <vector>

namespace qthreat::qec {

// Physical gate error rate of the underlying hardware. The distillation
// planner only terminates for p_g below 1%, so that bound is enforced here.
struct PhysicalGateModel {
    double p_g;

    explicit PhysicalGateModel(double gate_error_rate);
};

// Logical resource counts of an attack circuit: T gates, Clifford gates and
// logical qubits.
struct LogicalCircuitProfile {
    double n_t;
    double n_c;
    double n_l;

    LogicalCircuitProfile(double t_count, double clifford_count, double logical_qubits);
};

// Whether code distances are solved as real numbers (matches the published
// fractional overhead factors) or rounded up to integers (conservative
// engineering estimate).
enum class DistanceMode { RealValued, IntegerCeiling };

// Physical-qubit scaling of the main circuit patch: Linear keeps the
// printed 3.125*n_L*d form, Quadratic uses 3.125*n_L*d^2 (standard
// surface-code area scaling).
enum class QubitFormula { Linear, Quadratic };

// Distillation factory plan: one code distance per layer, outermost first.
// Distances strictly decrease across layers.
struct DistillationSchedule {
    std::vector<double> distances;

    int layers() const { return static_cast<int>(distances.size()); }
};

struct FactoryPlan {
    DistillationSchedule schedule;
    double c_tau;      // clock cycles per T gate
    double tau;        // total clock cycles, n_T * c_tau
    double q_factory;  // physical qubits in the distillation factory
};

// Combined time/space overhead of running a logical circuit on error-corrected
// hardware.
struct OverheadResult {
    DistillationSchedule schedule;
    double c_tau;      // cycles per T gate
    double tau;        // total cycles
    double q_factory;  // factory physical qubits
    double d_c;        // code distance of the main circuit
    double q_circuit;  // circuit physical qubits
    double n_q;        // q_factory + q_circuit
    double c_nq;       // physical qubits per logical qubit
};

// Logical error rate per cycle of a distance-d surface-code patch:
// 192*d*(100*p_g)^((d+1)/2). This is a bound and may exceed 1.
double logical_error_per_cycle(double d, double p_g);

// Plans the magic-state factory for n_T T gates: iterates distillation layers,
// tightening each layer's code distance until the per-layer tolerance clears
// 10*p_g. Returns zero cycles and zero qubits when no layer is needed.
FactoryPlan plan_distillation(const PhysicalGateModel& model, double n_t,
                              DistanceMode mode = DistanceMode::RealValued);

// Smallest code distance d with (80*p_g)^((d+1)/2) <= 1/n_C, clamped below
// at 1. Rejects p_g >= 1/80 (the condition would be unsatisfiable).
double circuit_code_distance(const PhysicalGateModel& model, double n_c,
                             DistanceMode mode = DistanceMode::RealValued);

// Full overhead computation for a logical circuit profile.
OverheadResult overheads(const PhysicalGateModel& model, const LogicalCircuitProfile& profile,
                         DistanceMode mode = DistanceMode::RealValued,
                         QubitFormula formula = QubitFormula::Quadratic);

}  // namespace qthreat::qec
