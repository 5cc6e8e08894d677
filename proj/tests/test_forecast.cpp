#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "qthreat/forecast.hpp"

using namespace qthreat::forecast;

TEST_CASE("exponential fit on exact geometric data") {
    const DataPoint points[] = {{2013.0, 2.0}, {2018.0, 64.0}};
    const ExponentialFit fit = fit_exponential(points);
    CHECK(fit.doubling_time_years() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.anchor_year == 2018.0);
    CHECK(fit.anchor_value == doctest::Approx(64.0).epsilon(1e-12));
    CHECK(fit.value_at(2013.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("exponential fit rejects degenerate input") {
    const DataPoint one[] = {{2013.0, 2.0}};
    CHECK_THROWS_AS(fit_exponential(one), std::invalid_argument);
    const DataPoint same_year[] = {{2013.0, 2.0}, {2013.0, 4.0}};
    CHECK_THROWS_AS(fit_exponential(same_year), std::invalid_argument);
    const DataPoint nonpositive[] = {{2013.0, 2.0}, {2014.0, 0.0}};
    CHECK_THROWS_AS(fit_exponential(nonpositive), std::invalid_argument);
    const DataPoint out_of_range[] = {{1999.0, 2.0}, {2014.0, 4.0}};
    CHECK_THROWS_AS(fit_exponential(out_of_range), std::invalid_argument);
}

TEST_CASE("qubit table fit has positive growth") {
    const auto tables = HardwareTables::defaults();
    const ExponentialFit fit = fit_exponential(tables.qubit_counts);
    CHECK(fit.growth_rate > 0.0);
}

TEST_CASE("hardware timeline anchors and caps") {
    const HardwareModel opt(Scenario::optimistic());
    const HardwareModel pess(Scenario::pessimistic());

    // overhead factor is 1 at the 2017 baseline for both scenarios
    CHECK(opt.overhead_factor(2017.0) == 1.0);
    CHECK(pess.overhead_factor(2017.0) == 1.0);

    // infidelity anchor: level fit of the observed infidelities under the
    // halving law; the most recent observation is 0.003 at 2018.5
    CHECK(opt.infidelity(2018.5) == doctest::Approx(0.003).epsilon(0.15));

    // gate speed at the 2018.5 anchor is near the observed 25 ns gate
    CHECK(opt.gate_speed(2018.5) == doctest::Approx(4e7).epsilon(0.30));

    // caps and floors are reached in finite time
    CHECK(opt.gate_speed(2045.0) == 50e9);
    CHECK(pess.gate_speed(2045.0) == 5e9);
    CHECK(opt.infidelity(2045.0) == 5e-6);
    CHECK(pess.infidelity(2045.0) == 5e-5);

    // qubits, before the cap, follow the scenario doubling cadence
    CHECK(opt.qubits(2030.0) / opt.qubits(2029.0) ==
          doctest::Approx(std::pow(2.0, 1.2)).epsilon(1e-9));

    CHECK_THROWS_AS(opt.qubits(2016.0), std::invalid_argument);
}

TEST_CASE("scenario dominance") {
    const HardwareModel opt(Scenario::optimistic());
    const HardwareModel pess(Scenario::pessimistic());
    for (double t = 2017.0; t <= 2060.0; t += 0.25) {
        CHECK(opt.qubits(t) >= pess.qubits(t));
        CHECK(opt.gate_speed(t) >= pess.gate_speed(t));
        CHECK(opt.infidelity(t) <= pess.infidelity(t));
        CHECK(opt.overhead_factor(t) <= pess.overhead_factor(t));
    }
}

TEST_CASE("network model splice and identity") {
    const NetworkModel opt(Scenario::optimistic());
    const NetworkModel pess(Scenario::pessimistic());
    const double t_end = opt.history_end();
    CHECK(t_end == 2017.5);

    // both scenarios equal the fitted value at the end of history
    CHECK(opt.rate(t_end) == doctest::Approx(pess.rate(t_end)).epsilon(1e-12));

    // value and slope continuity at the exponential-to-linear splice
    const double splice = t_end + 5.0;
    const double eps = 1e-6;
    CHECK(opt.rate(splice - eps) == doctest::Approx(opt.rate(splice + eps)).epsilon(1e-5));
    const double left_slope = (opt.rate(splice) - opt.rate(splice - eps)) / eps;
    const double right_slope = (opt.rate(splice + eps) - opt.rate(splice)) / eps;
    CHECK(left_slope == doctest::Approx(right_slope).epsilon(1e-3));

    // optimistic dominates pessimistic
    for (double t = t_end; t <= 2060.0; t += 0.5) CHECK(opt.rate(t) >= pess.rate(t));

    // difficulty identity D(t) = rate(t) * 600 * 2^-32 at full precision
    for (double t = t_end; t <= 2060.0; t += 0.5)
        CHECK(opt.difficulty(t) == opt.rate(t) * 600.0 * std::ldexp(1.0, -32));

    // the mid-2017 difficulty of 860e9 back-maps to ~6.16e18 H/s
    CHECK(860e9 * 4294967296.0 / 600.0 == doctest::Approx(6.1561197909333333e18).epsilon(1e-12));

    CHECK_THROWS_AS(opt.rate(2017.0), std::invalid_argument);
}

TEST_CASE("attack feasibility and crossovers") {
    const ForecastModel opt(Scenario::optimistic());
    const ForecastModel pess(Scenario::pessimistic());

    // pessimistic crack time dominates optimistic at every sampled year
    for (int year = 2018; year <= 2050; ++year) {
        CHECK(attack_feasibility(pess, year).crack_time_s >=
              attack_feasibility(opt, year).crack_time_s);
    }

    const CrossoverReport opt_report = find_crossovers(opt);
    REQUIRE(opt_report.signature_break_year.has_value());
    REQUIRE(opt_report.qubit_sufficiency_year.has_value());
    CHECK(std::abs(*opt_report.signature_break_year - 2027) <= 1);
    CHECK(std::abs(*opt_report.qubit_sufficiency_year - 2028) <= 1);

    const CrossoverReport pess_report = find_crossovers(pess);
    REQUIRE(pess_report.signature_break_year.has_value());
    CHECK(*pess_report.signature_break_year >= *opt_report.signature_break_year);
    if (pess_report.qubit_sufficiency_year)
        CHECK(*pess_report.qubit_sufficiency_year >= *opt_report.qubit_sufficiency_year);

    // determinism
    const CrossoverReport again = find_crossovers(opt);
    CHECK(again.signature_break_year == opt_report.signature_break_year);
}

TEST_CASE("figure series") {
    const ForecastModel opt(Scenario::optimistic());
    const ForecastModel pess(Scenario::pessimistic());
    const YearRange range{2018.0, 2042.0, 1.0};

    const FigureSeries fig2 = emit_figure_series(FigureId::Fig2, opt, pess, range);
    REQUIRE(!fig2.rows.empty());
    const std::size_t asic_col = fig2.columns.size() - 1;
    CHECK(fig2.columns[asic_col] == "asic_reference_hs");
    for (const auto& row : fig2.rows) CHECK(row[asic_col] == 14e12);

    const FigureSeries fig5 = emit_figure_series(FigureId::Fig5, opt, pess, range);
    for (const auto& row : fig5.rows) CHECK(row.back() == 600.0);

    const FigureSeries appB = emit_figure_series(FigureId::AppB, opt, pess, range);
    for (const auto& row : appB.rows) {
        CHECK(row[2] == row[1] * 600.0 * std::ldexp(1.0, -32));  // optimistic identity
        CHECK(row[4] == row[3] * 600.0 * std::ldexp(1.0, -32));  // pessimistic identity
    }

    const FigureSeries appC = emit_figure_series(FigureId::AppC, opt, pess, range);
    CHECK(appC.rows.size() == 25);

    CHECK(!figure_from_string("fig9").has_value());
    CHECK(figure_from_string("appB") == FigureId::AppB);
}
