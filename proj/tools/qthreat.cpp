// qthreat: quantum-threat estimates, technology forecasts and executable
// proofs-of-work from one command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qthreat/attack_estimator.hpp"
#include "qthreat/forecast.hpp"
#include "qthreat/pow/cost_model.hpp"
#include "qthreat/pow/hashcash.hpp"
#include "qthreat/pow/momentum.hpp"
#include "qthreat/pqsig_table.hpp"
#include "qthreat/si_units.hpp"

using json = nlohmann::ordered_json;
using namespace qthreat;

namespace {

constexpr const char* kConfigEnvVar = "QTHREAT_CONFIG";

struct RunConfig {
    std::string format = "table";  // table | json | csv
    std::string scenario = "both";
    std::string distance_mode = "real";      // real | integer
    std::string qubit_formula = "quadratic"; // quadratic | linear
    std::string hash_rate_form = "first-principles";
    bool apply_overhead_to_qubits = true;
    std::uint64_t seed = 1;
    std::optional<std::vector<forecast::DataPoint>> network_history;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<forecast::DataPoint> parse_history_json(const json& j) {
    const json& array = j.is_object() && j.contains("network_history")
                            ? j.at("network_history")
                            : j;
    if (!array.is_array() || array.empty())
        throw UsageError("network history must be a non-empty array");
    std::vector<forecast::DataPoint> points;
    for (const json& row : array)
        points.push_back({row.at("year").get<double>(), row.at("rate_hs").get<double>()});
    return points;
}

void load_config_file(const std::string& path, RunConfig& config) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("malformed config file: " + std::string(e.what()));
    }
    if (j.contains("format")) config.format = j.at("format").get<std::string>();
    if (j.contains("scenario")) config.scenario = j.at("scenario").get<std::string>();
    if (j.contains("distance_mode"))
        config.distance_mode = j.at("distance_mode").get<std::string>();
    if (j.contains("qubit_formula"))
        config.qubit_formula = j.at("qubit_formula").get<std::string>();
    if (j.contains("hash_rate_form"))
        config.hash_rate_form = j.at("hash_rate_form").get<std::string>();
    if (j.contains("apply_overhead_to_qubits"))
        config.apply_overhead_to_qubits = j.at("apply_overhead_to_qubits").get<bool>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("network_history")) config.network_history = parse_history_json(j);
}

qec::DistanceMode distance_mode(const RunConfig& config) {
    if (config.distance_mode == "real") return qec::DistanceMode::RealValued;
    if (config.distance_mode == "integer") return qec::DistanceMode::IntegerCeiling;
    throw UsageError("distance mode must be 'real' or 'integer'");
}

qec::QubitFormula qubit_formula(const RunConfig& config) {
    if (config.qubit_formula == "quadratic") return qec::QubitFormula::Quadratic;
    if (config.qubit_formula == "linear") return qec::QubitFormula::Linear;
    throw UsageError("qubit formula must be 'quadratic' or 'linear'");
}

double parse_number(const std::string& text, const char* what) {
    const auto value = si::parse_si(text);
    if (!value) throw UsageError(std::string("cannot parse ") + what + ": " + text);
    return *value;
}

void emit_scalar_report(const json& report, const RunConfig& config,
                        const std::vector<std::pair<std::string, std::string>>& table_lines) {
    if (config.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else if (config.format == "csv") {
        std::printf("field,value\n");
        for (const auto& [key, value] : table_lines)
            std::printf("%s,%s\n", key.c_str(), value.c_str());
    } else {
        std::size_t width = 0;
        for (const auto& [key, value] : table_lines) width = std::max(width, key.size());
        for (const auto& [key, value] : table_lines)
            std::printf("%-*s  %s\n", static_cast<int>(width), key.c_str(), value.c_str());
    }
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------- estimates

int cmd_estimate_mining(const RunConfig& config, double difficulty, double clock_hz,
                        double error_rate, int machines) {
    const qec::PhysicalGateModel model(error_rate);
    const qec::OverheadResult overhead = qec::overheads(
        model, attack::mining_profile(difficulty), distance_mode(config), qubit_formula(config));
    const attack::MiningAttackParams params{difficulty, clock_hz, error_rate, machines};
    const auto first =
        attack::effective_hash_rate(params, overhead, attack::HashRateForm::FirstPrinciples);
    const auto fixed =
        attack::effective_hash_rate(params, overhead, attack::HashRateForm::FixedCoefficient);
    const bool default_first = config.hash_rate_form != "fixed-coefficient";
    const auto& preferred = default_first ? first : fixed;
    const double optimistic = attack::optimistic_hash_rate(clock_hz, difficulty);
    const double pool = attack::pool_attack_fraction(machines, clock_hz, difficulty);

    json report;
    report["command"] = "estimate-mining";
    report["inputs"] = {{"difficulty", difficulty},
                        {"clock_hz", clock_hz},
                        {"gate_error_rate", error_rate},
                        {"machines", machines},
                        {"distance_mode", config.distance_mode},
                        {"qubit_formula", config.qubit_formula},
                        {"hash_rate_form",
                         default_first ? "first-principles" : "fixed-coefficient"}};
    report["oracle_calls"] = first.oracle_calls;
    report["layers"] = overhead.schedule.layers();
    report["distances"] = overhead.schedule.distances;
    report["c_tau"] = overhead.c_tau;
    report["c_nq"] = overhead.c_nq;
    report["cycles_per_oracle"] = first.cycles_per_oracle;
    report["tau_s"] = first.tau_s;
    report["tau_parallel_s"] = first.tau_parallel_s;
    report["h_qc_first_principles_hs"] = first.h_qc;
    report["h_qc_fixed_coefficient_hs"] = fixed.h_qc;
    report["h_parallel_hs"] = preferred.h_parallel;
    report["optimistic_h_qc_hs"] = optimistic;
    report["n_q"] = overhead.n_q;
    report["network_rate_hs"] = attack::network_rate_from_difficulty(difficulty);
    report["pool_fraction_optimistic"] = pool;

    emit_scalar_report(
        report, config,
        {{"difficulty", num(difficulty)},
         {"clock", si::format_si(clock_hz, "Hz")},
         {"gate error rate", num(error_rate)},
         {"oracle calls", num(first.oracle_calls)},
         {"distillation layers", num(overhead.schedule.layers())},
         {"c_tau (cycles/T gate)", num(overhead.c_tau)},
         {"c_nQ (qubits/logical)", num(overhead.c_nq)},
         {"solve time", num(first.tau_s) + " s"},
         {"h_QC first-principles", si::format_si(first.h_qc, "H/s")},
         {"h_QC fixed-coefficient", si::format_si(fixed.h_qc, "H/s")},
         {"h_QC optimistic model", si::format_si(optimistic, "H/s")},
         {"parallel rate (" + std::to_string(machines) + " machines, " +
              (default_first ? "first-principles" : "fixed-coefficient") + ")",
          si::format_si(preferred.h_parallel, "H/s")},
         {"physical qubits", num(overhead.n_q)},
         {"network rate", si::format_si(attack::network_rate_from_difficulty(difficulty), "H/s")},
         {"pool fraction (optimistic)", num(pool)}});
    return 0;
}

int cmd_estimate_signature(const RunConfig& config, int bits, double clock_hz,
                           double error_rate) {
    const auto est = attack::signature_crack_estimate({bits, clock_hz, error_rate},
                                                      distance_mode(config),
                                                      qubit_formula(config));
    json report;
    report["command"] = "estimate-signature";
    report["inputs"] = {{"bits", bits},
                        {"clock_hz", clock_hz},
                        {"gate_error_rate", error_rate},
                        {"distance_mode", config.distance_mode},
                        {"qubit_formula", config.qubit_formula}};
    report["logical_qubits"] = est.profile.logical_qubits;
    report["toffoli_count"] = est.profile.toffoli_count;
    report["toffoli_depth"] = est.profile.toffoli_depth;
    report["layers"] = est.overhead.schedule.layers();
    report["distances"] = est.overhead.schedule.distances;
    report["c_tau"] = est.overhead.c_tau;
    report["c_nq"] = est.overhead.c_nq;
    report["crack_time_s"] = est.tau_s;
    report["crack_time_days"] = est.tau_s / 86400.0;
    report["n_q"] = est.n_q;

    emit_scalar_report(report, config,
                       {{"key size", std::to_string(bits) + " bits"},
                        {"clock", si::format_si(clock_hz, "Hz")},
                        {"gate error rate", num(error_rate)},
                        {"logical qubits", num(est.profile.logical_qubits)},
                        {"Toffoli count", num(est.profile.toffoli_count)},
                        {"c_tau (cycles/T gate)", num(est.overhead.c_tau)},
                        {"c_nQ (qubits/logical)", num(est.overhead.c_nq)},
                        {"crack time", num(est.tau_s) + " s (" +
                                           num(est.tau_s / 86400.0) + " days)"},
                        {"physical qubits", num(est.n_q)}});
    return 0;
}

// ---------------------------------------------------------------- forecast

json crossover_json(const forecast::CrossoverReport& report) {
    json j;
    j["signature_break_year"] =
        report.signature_break_year ? json(*report.signature_break_year) : json(nullptr);
    j["qubit_sufficiency_year"] =
        report.qubit_sufficiency_year ? json(*report.qubit_sufficiency_year) : json(nullptr);
    j["hash_dominance_year"] =
        report.hash_dominance_year ? json(*report.hash_dominance_year) : json(nullptr);
    j["horizon_year"] = report.horizon_year;
    return j;
}

std::string year_text(const std::optional<int>& year) {
    return year ? std::to_string(*year) : std::string("beyond horizon");
}

int cmd_forecast(const RunConfig& config, double from, double to, double step,
                 const std::string& figure_name, int horizon) {
    const auto figure = forecast::figure_from_string(figure_name);
    if (!figure) throw UsageError("unknown figure id: " + figure_name);
    if (to < from || step <= 0.0) throw UsageError("bad year range");
    if (config.scenario != "optimistic" && config.scenario != "pessimistic" &&
        config.scenario != "both")
        throw UsageError("scenario must be 'optimistic', 'pessimistic' or 'both'");

    const auto history =
        config.network_history.value_or(forecast::default_network_history());
    const forecast::ForecastModel optimistic(forecast::Scenario::optimistic(),
                                             forecast::HardwareTables::defaults(), history);
    const forecast::ForecastModel pessimistic(forecast::Scenario::pessimistic(),
                                              forecast::HardwareTables::defaults(), history);

    const forecast::FigureSeries series =
        forecast::emit_figure_series(*figure, optimistic, pessimistic, {from, to, step});
    const forecast::CrossoverOptions options{horizon, config.apply_overhead_to_qubits};

    json report;
    report["command"] = "forecast";
    report["inputs"] = {{"scenario", config.scenario},
                        {"from", from},
                        {"to", to},
                        {"step", step},
                        {"figure", figure_name},
                        {"horizon_year", horizon},
                        {"apply_overhead_to_qubits", config.apply_overhead_to_qubits}};
    report["series"] = {{"columns", series.columns}, {"rows", series.rows}};
    report["crossovers"] = json::object();
    std::vector<std::pair<std::string, forecast::CrossoverReport>> crossovers;
    if (config.scenario != "pessimistic")
        crossovers.emplace_back("optimistic", forecast::find_crossovers(optimistic, options));
    if (config.scenario != "optimistic")
        crossovers.emplace_back("pessimistic", forecast::find_crossovers(pessimistic, options));
    for (const auto& [name, crossover] : crossovers)
        report["crossovers"][name] = crossover_json(crossover);

    if (config.format == "json") {
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    if (config.format == "csv") {
        for (std::size_t i = 0; i < series.columns.size(); ++i)
            std::printf("%s%s", i ? "," : "", series.columns[i].c_str());
        std::printf("\n");
        for (const auto& row : series.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::printf("%s%.12g", i ? "," : "", row[i]);
            std::printf("\n");
        }
        return 0;
    }
    std::printf("figure %s, %zu rows (%s..%s)\n", figure_name.c_str(), series.rows.size(),
                num(from).c_str(), num(to).c_str());
    for (const auto& [name, crossover] : crossovers) {
        std::printf("%s crossovers:\n", name.c_str());
        std::printf("  signature break (<600 s):  %s\n",
                    year_text(crossover.signature_break_year).c_str());
        std::printf("  qubit sufficiency (miner): %s\n",
                    year_text(crossover.qubit_sufficiency_year).c_str());
        std::printf("  hash dominance (vs ASIC):  %s\n",
                    year_text(crossover.hash_dominance_year).c_str());
    }
    return 0;
}

// ---------------------------------------------------------------- pow

pow::Target resolve_target(const std::string& target_hex, const std::string& difficulty_text) {
    if (!target_hex.empty() && !difficulty_text.empty())
        throw UsageError("give either a target or a difficulty, not both");
    if (!target_hex.empty()) {
        try {
            return pow::target_from_hex(target_hex);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    if (!difficulty_text.empty())
        return pow::difficulty_to_target(parse_number(difficulty_text, "difficulty"));
    throw UsageError("a --target or --difficulty is required");
}

pow::BlockHeader resolve_header(const std::string& header_hex, const std::string& header_file) {
    if (!header_hex.empty() && !header_file.empty())
        throw UsageError("give either --header or --header-file, not both");
    if (!header_hex.empty()) {
        const auto header = pow::header_from_hex(header_hex);
        if (!header) throw UsageError("malformed header hex (need 160 hex chars)");
        return *header;
    }
    if (header_file.empty()) throw UsageError("a --header or --header-file is required");
    std::ifstream in(header_file, std::ios::binary);
    pow::HeaderBytes bytes;
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size()) ||
        in.peek() != std::ifstream::traits_type::eof())
        throw UsageError("header file must hold exactly 80 bytes");
    return pow::deserialize(bytes);
}

int cmd_hashcash_mine(const RunConfig& config, const pow::BlockHeader& header_template,
                      const pow::Target& target, const pow::HashcashSearch& search,
                      const std::string& header_out) {
    const pow::HashcashResult result = pow::hashcash_mine(header_template, target, search);

    json report;
    report["command"] = "hashcash-mine";
    report["target_hex"] = pow::target_to_hex(target);
    report["found"] = result.header.has_value();
    report["attempts"] = result.attempts;
    std::vector<std::pair<std::string, std::string>> lines = {
        {"found", result.header ? "yes" : "no (search space exhausted)"},
        {"attempts", std::to_string(result.attempts)}};
    if (result.header) {
        report["header_hex"] = pow::header_to_hex(*result.header);
        report["hash_hex"] = pow::to_hex(pow::header_hash(*result.header));
        report["nonce"] = result.header->nonce;
        report["timestamp"] = result.header->timestamp;
        lines.push_back({"header", pow::header_to_hex(*result.header)});
        lines.push_back({"hash", pow::to_hex(pow::header_hash(*result.header))});
        lines.push_back({"nonce", std::to_string(result.header->nonce)});
        if (!header_out.empty()) {
            std::ofstream out(header_out, std::ios::binary);
            const pow::HeaderBytes bytes = pow::serialize(*result.header);
            out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
            if (!out) throw UsageError("cannot write header file: " + header_out);
        }
    }
    emit_scalar_report(report, config, lines);
    return 0;
}

int cmd_hashcash_verify(const RunConfig& config, const pow::BlockHeader& header,
                        const pow::Target& target) {
    const bool valid = pow::hashcash_verify(header, target);
    json report;
    report["command"] = "hashcash-verify";
    report["valid"] = valid;
    report["hash_hex"] = pow::to_hex(pow::header_hash(header));
    emit_scalar_report(report, config,
                       {{"hash", pow::to_hex(pow::header_hash(header))},
                        {"valid", valid ? "yes" : "no"}});
    return valid ? 0 : 1;
}

int cmd_momentum_mine(const RunConfig& config, const pow::MomentumParams& params,
                      std::uint64_t h) {
    const pow::MomentumResult result = pow::momentum_mine(h, params);
    json report;
    report["command"] = "momentum-mine";
    report["found"] = result.solution.has_value();
    report["h2_evals"] = result.stats.h2_evals;
    report["h1_evals"] = result.stats.h1_evals;
    std::vector<std::pair<std::string, std::string>> lines;
    if (result.solution) {
        const std::string record = pow::solution_to_record(*result.solution, params);
        report["record"] = record;
        report["a"] = result.solution->a;
        report["b"] = result.solution->b;
        lines.push_back({"solution", record});
    } else {
        lines.push_back({"solution", "not found (subset exhausted)"});
    }
    lines.push_back({"h2 evaluations", std::to_string(result.stats.h2_evals)});
    lines.push_back({"h1 evaluations", std::to_string(result.stats.h1_evals)});
    emit_scalar_report(report, config, lines);
    return 0;
}

int cmd_momentum_verify(const RunConfig& config, const std::string& record_text) {
    const auto parsed = pow::solution_from_record(record_text);
    if (!parsed) throw UsageError("malformed momentum record");
    const bool valid = pow::momentum_verify(parsed->first, parsed->second);
    json report;
    report["command"] = "momentum-verify";
    report["valid"] = valid;
    emit_scalar_report(report, config, {{"valid", valid ? "yes" : "no"}});
    return valid ? 0 : 1;
}

int cmd_cost_model(const RunConfig& config, const pow::MomentumParams& params) {
    const pow::CostModelReport report = pow::classical_cost_model(params);
    json j;
    j["command"] = "cost-model";
    j["inputs"] = {{"n", params.n},
                   {"ell", params.ell},
                   {"subset_bits", params.subset_bits},
                   {"target", params.target}};
    j["m"] = report.m;
    j["classical_time"] = report.classical_time;
    j["optimal_subset"] = report.optimal_subset;
    j["optimal_time"] = report.optimal_time;
    j["quantum_lower_bound"] = report.quantum_lower_bound;
    j["memory_limited_time"] =
        report.memory_limited_time ? json(*report.memory_limited_time) : json(nullptr);

    std::vector<std::pair<std::string, std::string>> lines = {
        {"expected headers m", num(report.m)},
        {"classical time", num(report.classical_time)},
        {"optimal subset |S|", num(report.optimal_subset)},
        {"optimal time T", num(report.optimal_time)},
        {"quantum lower bound", num(report.quantum_lower_bound)}};
    if (report.memory_limited_time)
        lines.push_back({"memory-limited time", num(*report.memory_limited_time)});
    emit_scalar_report(j, config, lines);
    return 0;
}

// ---------------------------------------------------------------- pqsig

int cmd_pqsig_table(const RunConfig& config, const std::string& sort_key, bool descending) {
    pqsig::SortKey key;
    if (sort_key == "security_bits") key = pqsig::SortKey::SecurityBits;
    else if (sort_key == "pk_kb") key = pqsig::SortKey::PublicKeyLength;
    else if (sort_key == "sig_kb") key = pqsig::SortKey::SignatureLength;
    else if (sort_key == "total_kb") key = pqsig::SortKey::TotalLength;
    else throw UsageError("unknown sort key: " + sort_key);

    const auto records = pqsig::sorted_records(key, descending);
    if (config.format == "json") {
        json j;
        j["command"] = "pqsig-table";
        j["records"] = json::array();
        for (const auto& r : records) {
            j["records"].push_back({{"type_code", r.type_code},
                                    {"name", r.name},
                                    {"security_bits", r.security_bits},
                                    {"pk_kb", r.pk_kb},
                                    {"sig_kb", r.sig_kb},
                                    {"total_kb", r.total_kb},
                                    {"reference", r.reference}});
        }
        std::cout << j.dump(2) << "\n";
    } else if (config.format == "csv") {
        std::printf("type_code,name,security_bits,pk_kb,sig_kb,total_kb,reference\n");
        for (const auto& r : records)
            std::printf("%s,%s,%d,%.12g,%.12g,%.12g,%s\n", r.type_code.c_str(), r.name.c_str(),
                        r.security_bits, r.pk_kb, r.sig_kb, r.total_kb, r.reference.c_str());
    } else {
        std::printf("%-6s %-10s %9s %9s %9s %9s  %s\n", "type", "name", "sec(bit)", "pk(kb)",
                    "sig(kb)", "total(kb)", "reference");
        for (const auto& r : records)
            std::printf("%-6s %-10s %9d %9.6g %9.6g %9.6g  %s\n", r.type_code.c_str(),
                        r.name.c_str(), r.security_bits, r.pk_kb, r.sig_kb, r.total_kb,
                        r.reference.c_str());
    }
    return 0;
}

// ---------------------------------------------------------------- race

int cmd_race(const RunConfig& config, double fraction, int confirmations,
             const std::string& method, std::uint64_t trials) {
    json report;
    report["command"] = "race";
    report["inputs"] = {{"fraction", fraction},
                        {"confirmations", confirmations},
                        {"method", method}};
    std::vector<std::pair<std::string, std::string>> lines;
    if (method == "analytic") {
        const double p = attack::race_success_probability(fraction, confirmations);
        report["probability"] = p;
        lines.push_back({"probability", num(p)});
    } else if (method == "monte-carlo") {
        report["inputs"]["trials"] = trials;
        report["inputs"]["seed"] = config.seed;
        const attack::RaceResult r = attack::race_success_probability(
            fraction, confirmations, {config.seed, trials});
        report["probability"] = r.probability;
        report["std_error"] = r.std_error;
        lines.push_back({"probability", num(r.probability)});
        lines.push_back({"std error", num(r.std_error)});
    } else {
        throw UsageError("method must be 'analytic' or 'monte-carlo'");
    }
    emit_scalar_report(report, config, lines);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum threat estimates and proofs-of-work"};
    app.require_subcommand(1);

    RunConfig config;
    std::string config_path;
    if (const char* env = std::getenv(kConfigEnvVar)) config_path = env;

    app.add_option("--config", config_path, "JSON config file (flags take precedence)");
    // Parse the config file before flag values land in `config`.
    app.parse_complete_callback([] {});

    std::string format_flag, scenario_flag, mode_flag, formula_flag, form_flag;
    app.add_option("--format", format_flag, "output format: table, json or csv");
    app.add_option("--seed", config.seed, "seed for stochastic subcommands");

    // estimate-mining
    auto* mining = app.add_subcommand("estimate-mining", "Grover mining attack estimate");
    std::string m_difficulty, m_clock;
    double m_error = 0.0;
    int m_machines = 1;
    mining->add_option("--difficulty,-D", m_difficulty, "hashing difficulty")->required();
    mining->add_option("--clock,-s", m_clock, "clock speed in Hz (SI suffixes ok)")->required();
    mining->add_option("--error-rate,-p", m_error, "physical gate error rate")->required();
    mining->add_option("--machines", m_machines, "parallel quantum processors");
    mining->add_option("--distance-mode", mode_flag, "real or integer distances");
    mining->add_option("--qubit-formula", formula_flag, "quadratic or linear circuit qubits");
    mining->add_option("--form", form_flag, "first-principles or fixed-coefficient");

    // estimate-signature
    auto* signature = app.add_subcommand("estimate-signature", "ECDLP key recovery estimate");
    std::string s_clock;
    int s_bits = 256;
    double s_error = 0.0;
    signature->add_option("--bits,-n", s_bits, "key size in bits");
    signature->add_option("--clock,-s", s_clock, "clock speed in Hz")->required();
    signature->add_option("--error-rate,-p", s_error, "physical gate error rate")->required();
    signature->add_option("--distance-mode", mode_flag, "real or integer distances");
    signature->add_option("--qubit-formula", formula_flag, "quadratic or linear circuit qubits");

    // forecast
    auto* fc = app.add_subcommand("forecast", "timelines and crossover years");
    double f_from = 2018.0, f_to = 2042.0, f_step = 1.0;
    int f_horizon = 2060;
    std::string f_figure = "fig5";
    std::string f_history;
    bool f_no_overhead = false;
    fc->add_option("--scenario", scenario_flag, "optimistic, pessimistic or both");
    fc->add_option("--from", f_from, "first year of the series");
    fc->add_option("--to", f_to, "last year of the series");
    fc->add_option("--step", f_step, "year step");
    fc->add_option("--figure", f_figure, "fig1, fig2, fig3, fig5, appB or appC");
    fc->add_option("--horizon", f_horizon, "last year scanned for crossovers");
    fc->add_option("--history", f_history, "network hash-rate history JSON file");
    fc->add_flag("--no-overhead-on-qubits", f_no_overhead,
                 "do not apply the overhead reduction to qubit requirements");

    // pow
    auto* pow_cmd = app.add_subcommand("pow", "proof-of-work miners and verifiers");
    pow_cmd->require_subcommand(1);

    auto* hc_mine = pow_cmd->add_subcommand("hashcash-mine", "mine a block header");
    std::string hm_target, hm_difficulty, hm_header, hm_header_file, hm_out;
    std::uint64_t hm_nonce_begin = 0, hm_nonce_end = std::uint64_t{1} << 32;
    int hm_ts_bits = 0;
    hc_mine->add_option("--target", hm_target, "256-bit target, hex");
    hc_mine->add_option("--difficulty,-D", hm_difficulty, "difficulty (target = 2^224/D)");
    hc_mine->add_option("--header", hm_header, "template header, 160 hex chars");
    hc_mine->add_option("--header-file", hm_header_file, "template header, 80-byte file");
    hc_mine->add_option("--nonce-begin", hm_nonce_begin, "first nonce scanned");
    hc_mine->add_option("--nonce-end", hm_nonce_end, "one past the last nonce");
    hc_mine->add_option("--timestamp-bits", hm_ts_bits, "timestamp low bits to vary");
    hc_mine->add_option("--header-out", hm_out, "write the solved header here (80 bytes)");

    auto* hc_verify = pow_cmd->add_subcommand("hashcash-verify", "verify a block header");
    std::string hv_target, hv_difficulty, hv_header, hv_header_file;
    hc_verify->add_option("--target", hv_target, "256-bit target, hex");
    hc_verify->add_option("--difficulty,-D", hv_difficulty, "difficulty (target = 2^224/D)");
    hc_verify->add_option("--header", hv_header, "header, 160 hex chars");
    hc_verify->add_option("--header-file", hv_header_file, "header, 80-byte file");

    auto* mm_mine = pow_cmd->add_subcommand("momentum-mine", "find a colliding nonce pair");
    std::string mm_target = "ff", mm_h, mm_header, mm_header_file;
    int mm_n = 8, mm_ell = 12, mm_subset = 12;
    mm_mine->add_option("--n", mm_n, "h1 output bits");
    mm_mine->add_option("--ell", mm_ell, "h2 output bits / nonce width");
    mm_mine->add_option("--subset-bits", mm_subset, "log2 of the scanned subset");
    mm_mine->add_option("--target", mm_target, "h1 target, hex");
    mm_mine->add_option("--h-value", mm_h, "header hash H, hex");
    mm_mine->add_option("--header", mm_header, "block header, 160 hex chars");
    mm_mine->add_option("--header-file", mm_header_file, "block header, 80-byte file");

    auto* mm_verify = pow_cmd->add_subcommand("momentum-verify", "verify a solution record");
    std::string mv_record, mv_record_file;
    mm_verify->add_option("--record", mv_record, "one-line solution record");
    mm_verify->add_option("--record-file", mv_record_file, "file holding the record");

    auto* cost = pow_cmd->add_subcommand("cost-model", "classical/quantum work estimates");
    std::string cm_target = "100";
    int cm_n = 16, cm_ell = 16, cm_subset = 8;
    cost->add_option("--n", cm_n, "h1 output bits");
    cost->add_option("--ell", cm_ell, "h2 output bits");
    cost->add_option("--subset-bits", cm_subset, "log2 of the subset");
    cost->add_option("--target", cm_target, "h1 target, hex");

    // pqsig-table
    auto* pq = app.add_subcommand("pqsig-table", "post-quantum signature comparison");
    std::string pq_sort = "total_kb";
    bool pq_desc = false;
    pq->add_option("--sort", pq_sort, "security_bits, pk_kb, sig_kb or total_kb");
    pq->add_flag("--desc", pq_desc, "sort descending");

    // race
    auto* race = app.add_subcommand("race", "confirmation race success probability");
    double r_fraction = 0.0;
    int r_confirmations = 6;
    std::string r_method = "analytic";
    std::uint64_t r_trials = 1000000;
    race->add_option("--fraction,-q", r_fraction, "attacker hash fraction")->required();
    race->add_option("--confirmations,-k", r_confirmations, "blocks behind");
    race->add_option("--method", r_method, "analytic or monte-carlo");
    race->add_option("--trials", r_trials, "Monte-Carlo trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) load_config_file(config_path, config);
        if (!format_flag.empty()) config.format = format_flag;
        if (!scenario_flag.empty()) config.scenario = scenario_flag;
        if (!mode_flag.empty()) config.distance_mode = mode_flag;
        if (!formula_flag.empty()) config.qubit_formula = formula_flag;
        if (!form_flag.empty()) config.hash_rate_form = form_flag;
        if (config.format != "table" && config.format != "json" && config.format != "csv")
            throw UsageError("format must be 'table', 'json' or 'csv'");

        if (mining->parsed()) {
            return cmd_estimate_mining(config, parse_number(m_difficulty, "difficulty"),
                                       parse_number(m_clock, "clock"), m_error, m_machines);
        }
        if (signature->parsed()) {
            return cmd_estimate_signature(config, s_bits, parse_number(s_clock, "clock"),
                                          s_error);
        }
        if (fc->parsed()) {
            if (!f_history.empty()) {
                std::ifstream in(f_history);
                if (!in) throw UsageError("cannot read history file: " + f_history);
                json j;
                try {
                    in >> j;
                } catch (const json::exception& e) {
                    throw UsageError("malformed history file: " + std::string(e.what()));
                }
                config.network_history = parse_history_json(j);
            }
            if (f_no_overhead) config.apply_overhead_to_qubits = false;
            return cmd_forecast(config, f_from, f_to, f_step, f_figure, f_horizon);
        }
        if (hc_mine->parsed()) {
            return cmd_hashcash_mine(config, resolve_header(hm_header, hm_header_file),
                                     resolve_target(hm_target, hm_difficulty),
                                     {hm_nonce_begin, hm_nonce_end, hm_ts_bits}, hm_out);
        }
        if (hc_verify->parsed()) {
            return cmd_hashcash_verify(config, resolve_header(hv_header, hv_header_file),
                                       resolve_target(hv_target, hv_difficulty));
        }
        if (mm_mine->parsed()) {
            std::uint64_t target = 0, h = 0;
            try {
                target = std::stoull(mm_target, nullptr, 16);
            } catch (const std::exception&) {
                throw UsageError("malformed h1 target hex");
            }
            const pow::MomentumParams params(mm_n, mm_ell, mm_subset, target);
            if (!mm_h.empty()) {
                try {
                    h = std::stoull(mm_h, nullptr, 16);
                } catch (const std::exception&) {
                    throw UsageError("malformed H hex");
                }
            } else {
                h = pow::momentum_header_hash(resolve_header(mm_header, mm_header_file), params);
            }
            return cmd_momentum_mine(config, params, h);
        }
        if (mm_verify->parsed()) {
            std::string record = mv_record;
            if (record.empty() && !mv_record_file.empty()) {
                std::ifstream in(mv_record_file);
                if (!in) throw UsageError("cannot read record file: " + mv_record_file);
                std::getline(in, record);
            }
            if (record.empty()) throw UsageError("a --record or --record-file is required");
            return cmd_momentum_verify(config, record);
        }
        if (cost->parsed()) {
            std::uint64_t target = 0;
            try {
                target = std::stoull(cm_target, nullptr, 16);
            } catch (const std::exception&) {
                throw UsageError("malformed h1 target hex");
            }
            return cmd_cost_model(config, pow::MomentumParams(cm_n, cm_ell, cm_subset, target));
        }
        if (pq->parsed()) return cmd_pqsig_table(config, pq_sort, pq_desc);
        if (race->parsed()) return cmd_race(config, r_fraction, r_confirmations, r_method,
                                            r_trials);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
