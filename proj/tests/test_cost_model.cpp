#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "qthreat/pow/cost_model.hpp"

using namespace qthreat::pow;

TEST_CASE("classical cost at the worked example") {
    // n + ell = 32, t = 2^8: optimal T = sqrt(2^24) = 4096
    const MomentumParams optimal(16, 16, 12, 256);
    const CostModelReport at_optimum = classical_cost_model(optimal);
    CHECK(at_optimum.optimal_time == 4096.0);
    CHECK(at_optimum.optimal_subset == 4096.0);

    // |S| = 2^8 in the same search: m = 2^8, time = 2^16
    const MomentumParams small(16, 16, 8, 256);
    const CostModelReport limited = classical_cost_model(small);
    CHECK(limited.m == 256.0);
    CHECK(limited.classical_time == 65536.0);
    REQUIRE(limited.memory_limited_time.has_value());
    CHECK(*limited.memory_limited_time == 2.0 * limited.classical_time);

    // |S| at or above the optimum floors m at 1
    const MomentumParams big(16, 16, 13, 256);
    CHECK(classical_cost_model(big).m == 1.0);
    CHECK(!classical_cost_model(big).memory_limited_time.has_value());
}

TEST_CASE("quantum bound at the worked example") {
    // at the optimal subset the bound is T^(2/3) = 2^8
    const MomentumParams optimal(16, 16, 12, 256);
    CHECK(quantum_cost_model(optimal) == doctest::Approx(256.0).epsilon(1e-12));

    // classical/quantum ratio at the optimum is T^(1/3)
    const CostModelReport report = classical_cost_model(optimal);
    CHECK(report.classical_time / report.quantum_lower_bound ==
          doctest::Approx(std::cbrt(report.optimal_time)).epsilon(1e-12));
}

TEST_CASE("quantum bound never exceeds classical time") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const int ell = n + static_cast<int>(rng() % (24 - n));
        const int subset = static_cast<int>(rng() % (ell + 1));
        const std::uint64_t max_target = (std::uint64_t{1} << n) - 1;
        const std::uint64_t target = 1 + rng() % max_target;
        const MomentumParams params(n, ell, subset, target);

        const CostModelReport report = classical_cost_model(params);
        CHECK(report.quantum_lower_bound <= report.classical_time * (1.0 + 1e-12));
        CHECK(report.m >= 1.0);
        if (static_cast<double>(params.subset_size()) < report.optimal_subset)
            CHECK(report.memory_limited_time.has_value());
    }
}
