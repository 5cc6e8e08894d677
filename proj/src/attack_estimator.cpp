#include "qthreat/attack_estimator.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qthreat::attack {

namespace {

// Logical T-gate depth of one Grover oracle call (both SHA-256 evaluations,
// uncomputation and the inversion about the mean).
constexpr double kCyclesPerOracleLogical = 297784.0;
constexpr double kCliffordsPerT = 29.4;
constexpr double kMiningLogicalQubits = 2402.0;
constexpr double kTwoPow32 = 4294967296.0;
constexpr double kBlockTimeSeconds = 600.0;

double checked_difficulty(double difficulty) {
    if (!(difficulty >= 1.0)) throw std::invalid_argument("difficulty must be >= 1");
    return difficulty;
}

}  // namespace

double grover_oracle_calls(double difficulty) {
    checked_difficulty(difficulty);
    return std::numbers::pi * 16384.0 * std::sqrt(10.0 * difficulty);
}

qec::LogicalCircuitProfile mining_profile(double difficulty) {
    const double n_t = kCyclesPerOracleLogical * grover_oracle_calls(difficulty);
    return {n_t, kCliffordsPerT * n_t, kMiningLogicalQubits};
}

HashRateEstimate effective_hash_rate(const MiningAttackParams& params,
                                     const qec::OverheadResult& overhead, HashRateForm form) {
    checked_difficulty(params.difficulty);
    if (!(params.clock_hz > 0.0)) throw std::invalid_argument("clock speed must be positive");
    if (params.machines < 1) throw std::invalid_argument("machine count must be >= 1");
    if (!(overhead.c_tau > 0.0)) throw std::invalid_argument("c_tau must be positive");

    HashRateEstimate est;
    est.form = form;
    est.oracle_calls = grover_oracle_calls(params.difficulty);
    est.cycles_per_oracle = kCyclesPerOracleLogical * overhead.c_tau;
    est.tau_s = est.oracle_calls * est.cycles_per_oracle / params.clock_hz;
    est.tau_parallel_s = 0.39 * est.tau_s / std::sqrt(static_cast<double>(params.machines));

    const double expected_classical_hashes = params.difficulty * kTwoPow32;
    if (form == HashRateForm::FirstPrinciples) {
        est.h_qc = expected_classical_hashes / est.tau_s;
    } else {
        est.h_qc = 0.28 * params.clock_hz * std::sqrt(params.difficulty) / overhead.c_tau;
    }
    est.h_parallel = 2.56 * est.h_qc * std::sqrt(static_cast<double>(params.machines));
    est.n_q = overhead.n_q;
    return est;
}

HashRateEstimate estimate_mining_attack(const MiningAttackParams& params, qec::DistanceMode mode,
                                        qec::QubitFormula formula, HashRateForm form) {
    const qec::PhysicalGateModel model(params.gate_error_rate);
    const qec::OverheadResult overhead =
        qec::overheads(model, mining_profile(params.difficulty), mode, formula);
    return effective_hash_rate(params, overhead, form);
}

double optimistic_hash_rate(double clock_hz, double difficulty) {
    if (!(clock_hz > 0.0)) throw std::invalid_argument("clock speed must be positive");
    if (difficulty < 0.0) throw std::invalid_argument("difficulty must be >= 0");
    return 0.04 * clock_hz * std::sqrt(difficulty);
}

double network_rate_from_difficulty(double difficulty) {
    checked_difficulty(difficulty);
    return difficulty * kTwoPow32 / kBlockTimeSeconds;
}

double pool_attack_fraction(int machines, double clock_hz, double difficulty) {
    if (machines < 1) throw std::invalid_argument("machine count must be >= 1");
    const double pool_rate = 2.56 * optimistic_hash_rate(clock_hz, difficulty) *
                             std::sqrt(static_cast<double>(machines));
    return pool_rate / network_rate_from_difficulty(difficulty);
}

EcdlpProfile ecdlp_profile(int bits) {
    if (bits < 2) throw std::invalid_argument("key size must be >= 2 bits");
    const double n = static_cast<double>(bits);
    const int ceil_log2 = std::bit_width(static_cast<unsigned>(bits) - 1u);

    EcdlpProfile profile;
    profile.logical_qubits = 9.0 * n + 2.0 * ceil_log2 + 10.0 + 4.0;
    profile.toffoli_count = (448.0 * std::log2(n) + 4090.0) * n * n * n;
    // The depth/count ratio is only published for the 256-bit instance;
    // elsewhere the conservative depth equals the count.
    profile.toffoli_depth =
        bits == 256 ? profile.toffoli_count * (1.16 / 1.28) : profile.toffoli_count;
    return profile;
}

SignatureCrackEstimate signature_crack_estimate(const SignatureAttackParams& params,
                                                qec::DistanceMode mode,
                                                qec::QubitFormula formula) {
    if (!(params.clock_hz > 0.0)) throw std::invalid_argument("clock speed must be positive");
    const qec::PhysicalGateModel model(params.gate_error_rate);

    SignatureCrackEstimate est;
    est.profile = ecdlp_profile(params.bits);
    // One T gate per Toffoli at depth one, 20 Clifford gates per T gate.
    const qec::LogicalCircuitProfile circuit(est.profile.toffoli_count,
                                             20.0 * est.profile.toffoli_count,
                                             est.profile.logical_qubits);
    est.overhead = qec::overheads(model, circuit, mode, formula);
    est.tau_s = est.profile.toffoli_count * est.overhead.c_tau / params.clock_hz;
    est.n_q = est.overhead.n_q;
    return est;
}

double race_success_probability(double attacker_fraction, int confirmations) {
    if (attacker_fraction < 0.0 || attacker_fraction > 1.0)
        throw std::invalid_argument("hash fraction must lie in [0, 1]");
    if (confirmations < 0) throw std::invalid_argument("confirmations must be >= 0");
    if (confirmations == 0 || attacker_fraction >= 0.5) return 1.0;
    return std::pow(attacker_fraction / (1.0 - attacker_fraction),
                    static_cast<double>(confirmations));
}

RaceResult race_success_probability(double attacker_fraction, int confirmations,
                                    const RaceMonteCarlo& mc) {
    if (attacker_fraction < 0.0 || attacker_fraction > 1.0)
        throw std::invalid_argument("hash fraction must lie in [0, 1]");
    if (confirmations < 0) throw std::invalid_argument("confirmations must be >= 0");
    if (mc.trials == 0) throw std::invalid_argument("trial count must be >= 1");

    // Attacker starts `confirmations` blocks behind; each block is theirs with
    // probability q. A deficit 96 blocks past the start is abandoned as a
    // failure; the comeback probability from there is below (q/(1-q))^96.
    const int abandon_deficit = confirmations + 96;
    std::mt19937_64 rng(mc.seed);
    const auto win_threshold =
        static_cast<std::uint64_t>(attacker_fraction * 9007199254740992.0);  // q * 2^53

    std::uint64_t successes = 0;
    for (std::uint64_t trial = 0; trial < mc.trials; ++trial) {
        int deficit = confirmations;
        while (deficit > 0 && deficit < abandon_deficit) {
            deficit += (rng() >> 11) < win_threshold ? -1 : 1;
        }
        if (deficit == 0) ++successes;
    }

    const double p = static_cast<double>(successes) / static_cast<double>(mc.trials);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(mc.trials))};
}

}  // namespace qthreat::attack
