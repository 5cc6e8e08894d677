#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qthreat/attack_estimator.hpp"

namespace qthreat::forecast {

// One observation of some quantity (qubit count, gate speed, hash rate...).
struct DataPoint {
    double year;   // fractional years permitted, within [2010, 2100]
    double value;
};

// Named set of forecast assumptions.
struct Scenario {
    std::string name;
    double qubit_doubling_months;  // 10 or 20
    double speed_cap_hz;           // 50 GHz or 5 GHz
    double infidelity_floor;       // 5e-6 or 5e-5
    double beta;                   // overhead reduction base, 0.75 or 0.85

    static Scenario optimistic();
    static Scenario pessimistic();
};

// value(t) = anchor_value * exp(growth_rate * (t - anchor_year))
struct ExponentialFit {
    double anchor_value;
    double growth_rate;  // natural log units per year
    double anchor_year;  // last data year

    double value_at(double t) const;
    double doubling_time_years() const;
};

// Least-squares fit of log(value) against year. Rejects fewer than two
// points, repeated single-year data and non-positive values.
ExponentialFit fit_exponential(std::span<const DataPoint> points);

// Least-squares level fit with the growth rate pinned externally (used where
// a scenario prescribes the doubling time and the data only sets the level).
ExponentialFit fit_level(std::span<const DataPoint> points, double growth_rate);

// Appendix-style hardware observations. Year-only rows are placed at
// year + 0.5 in the defaults.
struct HardwareTables {
    std::vector<DataPoint> qubit_counts;
    std::vector<DataPoint> gate_speeds;        // gates/second
    std::vector<DataPoint> gate_infidelities;  // 1 - fidelity

    static HardwareTables defaults();
};

// Network hash-rate history (hashes/second). The values approximate the
// public blockchain charts and are shipped as a replaceable input.
std::vector<DataPoint> default_network_history();

struct HardwareSample {
    double qubits;
    double gate_speed_hz;
    double infidelity;
    double overhead_factor;
};

// Hardware trajectories under a scenario: qubits double per the scenario
// cadence, gate speed follows the fitted trend up to the cap, infidelity
// halves yearly down to the floor, and the algorithmic overhead factor decays
// as beta^(t-2017). Defined for t >= 2017.
class HardwareModel {
public:
    HardwareModel(Scenario scenario, HardwareTables tables = HardwareTables::defaults());

    double qubits(double t) const;
    double gate_speed(double t) const;
    double infidelity(double t) const;
    double overhead_factor(double t) const;
    HardwareSample sample(double t) const;

    const Scenario& scenario() const { return scenario_; }

private:
    Scenario scenario_;
    ExponentialFit qubit_fit_;
    ExponentialFit speed_fit_;
    ExponentialFit infidelity_fit_;
};

// Network hash rate and difficulty under a scenario. The optimistic branch
// continues the fitted exponential for five years and then goes linear with
// matched value and slope; the pessimistic branch is the tangent line at the
// end of history. Defined for t >= the last history year.
class NetworkModel {
public:
    NetworkModel(Scenario scenario, std::vector<DataPoint> history = default_network_history());

    double rate(double t) const;
    double difficulty(double t) const;  // rate(t) * 600 * 2^-32
    double history_end() const { return fit_.anchor_year; }

private:
    Scenario scenario_;
    ExponentialFit fit_;
};

// Scenario bundle used by the feasibility pipeline.
class ForecastModel {
public:
    explicit ForecastModel(Scenario scenario,
                           HardwareTables tables = HardwareTables::defaults(),
                           std::vector<DataPoint> history = default_network_history());

    const HardwareModel& hardware() const { return hardware_; }
    const NetworkModel& network() const { return network_; }
    const Scenario& scenario() const { return hardware_.scenario(); }

private:
    HardwareModel hardware_;
    NetworkModel network_;
};

struct FeasibilityPoint {
    double crack_time_s;     // 256-bit key recovery time
    double qubits_required;  // physical qubits for the Grover miner
    double qubits_available;
    double mining_h_qc;      // effective hash rate of one machine, H/s
};

// Evaluates the hardware at t, applies the overhead factor to both c_tau and
// c_nQ, and prices the signature attack and the Grover miner at difficulty(t).
FeasibilityPoint attack_feasibility(const ForecastModel& model, double t,
                                    bool apply_overhead_to_qubits = true);

// Hash rate of one reference ASIC miner.
inline constexpr double kAsicReferenceRate = 14e12;
// Block interval the signature attack must beat.
inline constexpr double kBlockIntervalSeconds = 600.0;

struct CrossoverReport {
    // First integer year each condition holds; empty when beyond the horizon.
    std::optional<int> signature_break_year;   // crack time < 600 s
    std::optional<int> qubit_sufficiency_year; // enough qubits for the miner
    std::optional<int> hash_dominance_year;    // one machine beats one ASIC
    int horizon_year;
};

struct CrossoverOptions {
    int horizon_year = 2060;
    bool apply_overhead_to_qubits = true;
};

CrossoverReport find_crossovers(const ForecastModel& model, const CrossoverOptions& options = {});

// Regenerates plotted series. Year-indexed figures honor the range/step;
// parameter-grid figures (fig1, fig3) use built-in grids.
enum class FigureId { Fig1, Fig2, Fig3, Fig5, AppB, AppC };

std::optional<FigureId> figure_from_string(const std::string& name);
std::string figure_to_string(FigureId id);

struct YearRange {
    double from = 2017.0;
    double to = 2042.0;
    double step = 1.0;
};

struct FigureSeries {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

FigureSeries emit_figure_series(FigureId figure, const ForecastModel& optimistic,
                                const ForecastModel& pessimistic, const YearRange& range = {});

}  // namespace qthreat::forecast
