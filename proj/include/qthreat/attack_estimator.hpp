#pragma once

#include <cstdint>

#include "qthreat/qec_overhead.hpp"

namespace qthreat::attack {

// Grover mining attack at a given hashing difficulty on a machine with the
// given clock speed and gate error rate, optionally run on several
// processors in parallel.
struct MiningAttackParams {
    double difficulty;
    double clock_hz;
    double gate_error_rate;
    int machines = 1;
};

// Which form of the effective-hash-rate formula to evaluate. FirstPrinciples
// recomputes the rate from the oracle count and cycle budget; FixedCoefficient
// uses the aggregate closed form 0.28*s*sqrt(D)/c_tau. The two disagree by
// roughly a factor of three; reports should state which form produced a
// number.
enum class HashRateForm { FirstPrinciples, FixedCoefficient };

struct HashRateEstimate {
    double oracle_calls;       // expected Grover oracle calls
    double cycles_per_oracle;  // clock cycles per oracle call
    double tau_s;              // expected solve time, seconds
    double tau_parallel_s;     // solve time with `machines` processors
    double h_qc;               // effective hash rate, hashes/second
    double h_parallel;         // effective rate with `machines` processors
    double n_q;                // physical qubits
    HashRateForm form;
};

// Key recovery against an n-bit elliptic-curve signature.
struct SignatureAttackParams {
    int bits;
    double clock_hz;
    double gate_error_rate;
};

// Logical resources of the discrete-log circuit, ancillas included.
struct EcdlpProfile {
    double logical_qubits;
    double toffoli_count;
    double toffoli_depth;
};

struct SignatureCrackEstimate {
    EcdlpProfile profile;
    qec::OverheadResult overhead;
    double tau_s;  // time to derive the key, seconds
    double n_q;    // physical qubits
};

// Expected Grover oracle calls to mine one block: pi * 2^14 * sqrt(10*D).
double grover_oracle_calls(double difficulty);

// Logical circuit profile of the Grover miner. The logical qubit count is
// fixed at 2402 independent of difficulty.
qec::LogicalCircuitProfile mining_profile(double difficulty);

// Effective hash rate of a quantum miner given precomputed error-correction
// overheads.
HashRateEstimate effective_hash_rate(const MiningAttackParams& params,
                                     const qec::OverheadResult& overhead,
                                     HashRateForm form = HashRateForm::FirstPrinciples);

// Convenience wrapper: profile -> overheads -> hash rate.
HashRateEstimate estimate_mining_attack(const MiningAttackParams& params,
                                        qec::DistanceMode mode = qec::DistanceMode::RealValued,
                                        qec::QubitFormula formula = qec::QubitFormula::Quadratic,
                                        HashRateForm form = HashRateForm::FirstPrinciples);

// Hash rate under the optimistic error-correction model with no distillation
// slowdown: 0.04 * s * sqrt(D).
double optimistic_hash_rate(double clock_hz, double difficulty);

// Network-wide hash rate implied by a difficulty at the 600 s block time:
// D * 2^32 / 600.
double network_rate_from_difficulty(double difficulty);

// Fraction of total network hashing power held by `machines` parallel quantum
// miners under the optimistic model.
double pool_attack_fraction(int machines, double clock_hz, double difficulty);

// Logical resources to solve an n-bit ECDLP instance:
// 9n + 2*ceil(log2 n) + 10 logical qubits plus 4 ancillas, and
// (448*log2(n) + 4090)*n^3 Toffoli gates.
EcdlpProfile ecdlp_profile(int bits);

// End-to-end signature-crack estimate: builds the logical profile, plans the
// error correction and converts cycles to seconds.
SignatureCrackEstimate signature_crack_estimate(
    const SignatureAttackParams& params, qec::DistanceMode mode = qec::DistanceMode::RealValued,
    qec::QubitFormula formula = qec::QubitFormula::Quadratic);

// Probability that an attacker with hash fraction q rebuilds k confirmations:
// min(1, (q/(1-q))^k).
double race_success_probability(double attacker_fraction, int confirmations);

struct RaceMonteCarlo {
    std::uint64_t seed;
    std::uint64_t trials;
};

struct RaceResult {
    double probability;
    double std_error;
};

// Monte-Carlo estimate of the same race: each block goes to the attacker with
// probability q; a trial succeeds when the attacker erases the k-block
// deficit. Deterministic for a fixed seed.
RaceResult race_success_probability(double attacker_fraction, int confirmations,
                                    const RaceMonteCarlo& mc);

}  // namespace qthreat::attack
