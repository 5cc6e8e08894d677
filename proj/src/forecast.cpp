#include "qthreat/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qthreat::forecast {

namespace {

constexpr double kOverheadBaseYear = 2017.0;
constexpr double kExponentialYears = 5.0;  // optimistic exp growth past history

void check_points(std::span<const DataPoint> points) {
    for (const DataPoint& p : points) {
        if (p.year < 2010.0 || p.year > 2100.0)
            throw std::invalid_argument("data point year out of range [2010, 2100]");
        if (!(p.value > 0.0))
            throw std::invalid_argument("data point values must be positive");
    }
}

double last_year(std::span<const DataPoint> points) {
    double year = points.front().year;
    for (const DataPoint& p : points) year = std::max(year, p.year);
    return year;
}

}  // namespace

Scenario Scenario::optimistic() { return {"optimistic", 10.0, 50e9, 5e-6, 0.75}; }
Scenario Scenario::pessimistic() { return {"pessimistic", 20.0, 5e9, 5e-5, 0.85}; }

double ExponentialFit::value_at(double t) const {
    return anchor_value * std::exp(growth_rate * (t - anchor_year));
}

double ExponentialFit::doubling_time_years() const {
    return std::numbers::ln2_v<double> / growth_rate;
}

ExponentialFit fit_exponential(std::span<const DataPoint> points) {
    if (points.size() < 2) throw std::invalid_argument("need at least two data points");
    check_points(points);

    const double n = static_cast<double>(points.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (const DataPoint& p : points) {
        mean_x += p.year;
        mean_y += std::log(p.value);
    }
    mean_x /= n;
    mean_y /= n;

    double sxy = 0.0, sxx = 0.0;
    for (const DataPoint& p : points) {
        const double dx = p.year - mean_x;
        sxy += dx * (std::log(p.value) - mean_y);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw std::invalid_argument("data points need distinct years");

    ExponentialFit fit;
    fit.growth_rate = sxy / sxx;
    fit.anchor_year = last_year(points);
    fit.anchor_value = std::exp(mean_y + fit.growth_rate * (fit.anchor_year - mean_x));
    return fit;
}

ExponentialFit fit_level(std::span<const DataPoint> points, double growth_rate) {
    if (points.empty()) throw std::invalid_argument("need at least one data point");
    check_points(points);

    ExponentialFit fit;
    fit.growth_rate = growth_rate;
    fit.anchor_year = last_year(points);
    double acc = 0.0;
    for (const DataPoint& p : points)
        acc += std::log(p.value) - growth_rate * (p.year - fit.anchor_year);
    fit.anchor_value = std::exp(acc / static_cast<double>(points.size()));
    return fit;
}

HardwareTables HardwareTables::defaults() {
    HardwareTables t;
    t.qubit_counts = {{2013.5, 2},  {2014.5, 5},  {2014.5, 3}, {2016.5, 5},
                      {2017.5, 16}, {2017.5, 20}, {2018.5, 49}};
    t.gate_speeds = {{2013.5, 1.0 / 420e-9},
                     {2015.5, 1.0 / 433e-9},
                     {2016.5, 1.0 / 160e-9},
                     {2017.5, 1.0 / 42e-9},
                     {2018.5, 1.0 / 25e-9}};
    t.gate_infidelities = {{2013.5, 1 - 0.9347}, {2014.5, 1 - 0.96},  {2015.5, 1 - 0.97},
                           {2016.5, 1 - 0.99},   {2017.5, 1 - 0.995}, {2018.5, 1 - 0.997}};
    return t;
}

std::vector<DataPoint> default_network_history() {
    return {{2012.0, 8.5e12}, {2013.0, 2.2e13},  {2014.0, 1.2e16}, {2015.0, 3.2e17},
            {2016.0, 7.8e17}, {2016.5, 1.55e18}, {2017.0, 2.5e18}, {2017.5, 5.8e18}};
}

HardwareModel::HardwareModel(Scenario scenario, HardwareTables tables)
    : scenario_(std::move(scenario)) {
    const double ln2 = std::numbers::ln2_v<double>;
    // The scenario pins the qubit doubling cadence and the yearly infidelity
    // halving; the data fixes the level. Gate speed has no prescribed rate,
    // so both parameters come from the fit.
    qubit_fit_ = fit_level(tables.qubit_counts, 12.0 * ln2 / scenario_.qubit_doubling_months);
    infidelity_fit_ = fit_level(tables.gate_infidelities, -ln2);
    speed_fit_ = fit_exponential(tables.gate_speeds);
}

namespace {
void check_year(double t) {
    if (t < 2017.0) throw std::invalid_argument("hardware timeline starts at 2017");
}
}  // namespace

double HardwareModel::qubits(double t) const {
    check_year(t);
    return qubit_fit_.value_at(t);
}

double HardwareModel::gate_speed(double t) const {
    check_year(t);
    return std::min(scenario_.speed_cap_hz, speed_fit_.value_at(t));
}

double HardwareModel::infidelity(double t) const {
    check_year(t);
    return std::max(scenario_.infidelity_floor, infidelity_fit_.value_at(t));
}

double HardwareModel::overhead_factor(double t) const {
    check_year(t);
    return std::pow(scenario_.beta, t - kOverheadBaseYear);
}

HardwareSample HardwareModel::sample(double t) const {
    return {qubits(t), gate_speed(t), infidelity(t), overhead_factor(t)};
}

NetworkModel::NetworkModel(Scenario scenario, std::vector<DataPoint> history)
    : scenario_(std::move(scenario)) {
    fit_ = fit_exponential(history);
}

double NetworkModel::rate(double t) const {
    const double t_end = fit_.anchor_year;
    if (t < t_end) throw std::invalid_argument("network forecast starts at the end of history");

    if (scenario_.name == "optimistic") {
        if (t <= t_end + kExponentialYears) return fit_.value_at(t);
        // Splice into linear growth, continuous in value and slope.
        const double splice_value = fit_.value_at(t_end + kExponentialYears);
        const double splice_slope = fit_.growth_rate * splice_value;
        return splice_value + splice_slope * (t - t_end - kExponentialYears);
    }
    const double end_value = fit_.anchor_value;
    return end_value + fit_.growth_rate * end_value * (t - t_end);
}

double NetworkModel::difficulty(double t) const {
    return rate(t) * 600.0 * std::ldexp(1.0, -32);
}

ForecastModel::ForecastModel(Scenario scenario, HardwareTables tables,
                             std::vector<DataPoint> history)
    : hardware_(scenario, std::move(tables)), network_(scenario, std::move(history)) {}

FeasibilityPoint attack_feasibility(const ForecastModel& model, double t,
                                    bool apply_overhead_to_qubits) {
    const HardwareSample hw = model.hardware().sample(t);
    const qec::PhysicalGateModel gate_model(hw.infidelity);

    FeasibilityPoint point;
    point.qubits_available = hw.qubits;

    // Signature attack: overhead reduction credits both time and space.
    const attack::SignatureCrackEstimate sig = attack::signature_crack_estimate(
        {256, hw.gate_speed_hz, hw.infidelity});
    point.crack_time_s = sig.tau_s * hw.overhead_factor;

    // Grover miner at the forecast difficulty.
    const double difficulty = model.network().difficulty(t);
    const qec::OverheadResult mining =
        qec::overheads(gate_model, attack::mining_profile(difficulty));
    point.qubits_required =
        apply_overhead_to_qubits ? mining.n_q * hw.overhead_factor : mining.n_q;

    qec::OverheadResult reduced = mining;
    reduced.c_tau *= hw.overhead_factor;
    const attack::HashRateEstimate rate = attack::effective_hash_rate(
        {difficulty, hw.gate_speed_hz, hw.infidelity, 1}, reduced);
    point.mining_h_qc = rate.h_qc;
    return point;
}

CrossoverReport find_crossovers(const ForecastModel& model, const CrossoverOptions& options) {
    CrossoverReport report;
    report.horizon_year = options.horizon_year;

    const int first_year =
        std::max(2017, static_cast<int>(std::ceil(model.network().history_end())));
    for (int year = first_year; year <= options.horizon_year; ++year) {
        const FeasibilityPoint p =
            attack_feasibility(model, year, options.apply_overhead_to_qubits);
        if (!report.signature_break_year && p.crack_time_s < kBlockIntervalSeconds)
            report.signature_break_year = year;
        if (!report.qubit_sufficiency_year && p.qubits_available >= p.qubits_required)
            report.qubit_sufficiency_year = year;
        if (!report.hash_dominance_year && p.mining_h_qc > kAsicReferenceRate)
            report.hash_dominance_year = year;
        if (report.signature_break_year && report.qubit_sufficiency_year &&
            report.hash_dominance_year)
            break;
    }
    return report;
}

std::optional<FigureId> figure_from_string(const std::string& name) {
    if (name == "fig1") return FigureId::Fig1;
    if (name == "fig2") return FigureId::Fig2;
    if (name == "fig3") return FigureId::Fig3;
    if (name == "fig5") return FigureId::Fig5;
    if (name == "appB") return FigureId::AppB;
    if (name == "appC") return FigureId::AppC;
    return std::nullopt;
}

std::string figure_to_string(FigureId id) {
    switch (id) {
        case FigureId::Fig1: return "fig1";
        case FigureId::Fig2: return "fig2";
        case FigureId::Fig3: return "fig3";
        case FigureId::Fig5: return "fig5";
        case FigureId::AppB: return "appB";
        case FigureId::AppC: return "appC";
    }
    return "unknown";
}

namespace {

std::vector<double> year_grid(const YearRange& range, double minimum) {
    if (!(range.step > 0.0) || range.to < range.from)
        throw std::invalid_argument("bad year range");
    std::vector<double> years;
    for (double t = range.from; t <= range.to + 1e-9; t += range.step)
        if (t >= minimum) years.push_back(t);
    return years;
}

FigureSeries mining_grid_series() {
    // Single-machine mining performance at the optimistic 50 GHz clock.
    FigureSeries series;
    series.columns = {"gate_error_rate", "difficulty", "h_qc_first_principles_hs",
                      "h_qc_fixed_coefficient_hs", "n_q"};
    const double clock = 50e9;
    for (double p_g : {1e-5, 2e-5, 5e-5, 1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3}) {
        for (double d = 1e6; d <= 1e16 + 1; d *= 100.0) {
            const attack::MiningAttackParams params{d, clock, p_g, 1};
            const auto first = attack::estimate_mining_attack(params);
            const auto fixed = attack::estimate_mining_attack(
                params, qec::DistanceMode::RealValued, qec::QubitFormula::Quadratic,
                attack::HashRateForm::FixedCoefficient);
            series.rows.push_back({p_g, d, first.h_qc, fixed.h_qc, first.n_q});
        }
    }
    return series;
}

FigureSeries signature_grid_series() {
    // Signature-crack performance at a 10 GHz clock, swept over error rate.
    FigureSeries series;
    series.columns = {"gate_error_rate", "crack_time_minutes", "n_q"};
    for (double p_g = 1e-6; p_g < 9.9e-3; p_g *= std::sqrt(10.0)) {
        const auto est = attack::signature_crack_estimate({256, 10e9, p_g});
        series.rows.push_back({p_g, est.tau_s / 60.0, est.n_q});
    }
    return series;
}

}  // namespace

FigureSeries emit_figure_series(FigureId figure, const ForecastModel& optimistic,
                                const ForecastModel& pessimistic, const YearRange& range) {
    FigureSeries series;
    const double history_end = std::max(optimistic.network().history_end(),
                                        pessimistic.network().history_end());
    switch (figure) {
        case FigureId::Fig1:
            return mining_grid_series();
        case FigureId::Fig3:
            return signature_grid_series();
        case FigureId::Fig2: {
            series.columns = {"year",
                              "network_rate_optimistic_hs",
                              "network_rate_pessimistic_hs",
                              "qc_hash_rate_optimistic_hs",
                              "qc_hash_rate_pessimistic_hs",
                              "asic_reference_hs"};
            for (double t : year_grid(range, history_end)) {
                const auto opt = attack_feasibility(optimistic, t);
                const auto pess = attack_feasibility(pessimistic, t);
                series.rows.push_back({t, optimistic.network().rate(t),
                                       pessimistic.network().rate(t), opt.mining_h_qc,
                                       pess.mining_h_qc, kAsicReferenceRate});
            }
            return series;
        }
        case FigureId::Fig5: {
            series.columns = {"year", "crack_time_optimistic_s", "crack_time_pessimistic_s",
                              "block_interval_reference_s"};
            for (double t : year_grid(range, history_end)) {
                const auto opt = attack_feasibility(optimistic, t);
                const auto pess = attack_feasibility(pessimistic, t);
                series.rows.push_back(
                    {t, opt.crack_time_s, pess.crack_time_s, kBlockIntervalSeconds});
            }
            return series;
        }
        case FigureId::AppB: {
            series.columns = {"year", "rate_optimistic_hs", "difficulty_optimistic",
                              "rate_pessimistic_hs", "difficulty_pessimistic"};
            for (double t : year_grid(range, history_end)) {
                series.rows.push_back({t, optimistic.network().rate(t),
                                       optimistic.network().difficulty(t),
                                       pessimistic.network().rate(t),
                                       pessimistic.network().difficulty(t)});
            }
            return series;
        }
        case FigureId::AppC: {
            series.columns = {"year",
                              "qubits_optimistic",
                              "qubits_pessimistic",
                              "gate_speed_optimistic_hz",
                              "gate_speed_pessimistic_hz",
                              "infidelity_optimistic",
                              "infidelity_pessimistic",
                              "overhead_optimistic",
                              "overhead_pessimistic"};
            for (double t : year_grid(range, 2017.0)) {
                const auto opt = optimistic.hardware().sample(t);
                const auto pess = pessimistic.hardware().sample(t);
                series.rows.push_back({t, opt.qubits, pess.qubits, opt.gate_speed_hz,
                                       pess.gate_speed_hz, opt.infidelity, pess.infidelity,
                                       opt.overhead_factor, pess.overhead_factor});
            }
            return series;
        }
    }
    throw std::invalid_argument("unknown figure id");
}

}  // namespace qthreat::forecast
