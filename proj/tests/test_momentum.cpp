#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>

#include "qthreat/pow/momentum.hpp"

using namespace qthreat::pow;

namespace {

std::uint64_t random_h(std::mt19937_64& rng, int n_bits) {
    return rng() >> (64 - n_bits);
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(MomentumParams(0, 12, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(MomentumParams(16, 12, 8, 1), std::invalid_argument);   // n > ell
    CHECK_THROWS_AS(MomentumParams(8, 65, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(MomentumParams(8, 12, 13, 1), std::invalid_argument);   // subset > ell
    CHECK_THROWS_AS(MomentumParams(8, 12, 8, 0), std::invalid_argument);    // zero target
    CHECK_THROWS_AS(MomentumParams(8, 12, 8, 256), std::invalid_argument);  // target >= 2^n
    CHECK_NOTHROW(MomentumParams(8, 12, 8, 255));
    CHECK_NOTHROW(MomentumParams(64, 64, 0, ~std::uint64_t{0}));
}

TEST_CASE("mine/verify round trip over random instances") {
    std::mt19937_64 rng(0x5eed);
    const MomentumParams params(8, 12, 12, 255);  // h1 condition vacuous

    int found = 0;
    for (int i = 0; i < 120; ++i) {
        const std::uint64_t h = random_h(rng, params.n);
        const MomentumResult result = momentum_mine(h, params);
        if (!result.solution) continue;
        ++found;
        CHECK(momentum_verify(*result.solution, params));
        CHECK(result.solution->a < result.solution->b);
        CHECK(result.solution->a != result.solution->b);

        // tampering breaks the proof
        MomentumSolution tampered = *result.solution;
        tampered.b ^= 1;
        CHECK(!momentum_verify(tampered, params));

        MomentumSolution equal = *result.solution;
        equal.b = equal.a;
        CHECK(!momentum_verify(equal, params));
    }
    // at |S| = 2^12 over 2^12 digests, ~2000 collisions per header are
    // expected; a vacuous h1 makes every one a solution
    CHECK(found == 120);
}

TEST_CASE("miner matches the exhaustive oracle") {
    std::mt19937_64 rng(0xbeef);

    for (int i = 0; i < 6; ++i) {
        const MomentumParams params(8, 12, 12, i < 3 ? 255 : 31);
        const std::uint64_t h = random_h(rng, params.n);

        auto mined = momentum_mine_all(h, params);
        auto oracle = momentum_bruteforce_oracle(h, params);
        auto key = [](const MomentumSolution& s) { return std::pair{s.a, s.b}; };
        std::sort(mined.begin(), mined.end(),
                  [&](auto& x, auto& y) { return key(x) < key(y); });
        std::sort(oracle.begin(), oracle.end(),
                  [&](auto& x, auto& y) { return key(x) < key(y); });
        CHECK(mined == oracle);

        // the first mined solution belongs to the oracle set
        const MomentumResult first = momentum_mine(h, params);
        if (first.solution)
            CHECK(std::find(oracle.begin(), oracle.end(), *first.solution) != oracle.end());
    }
}

TEST_CASE("oracle collision count matches the birthday expectation") {
    std::mt19937_64 rng(0xfeed);
    const MomentumParams params(12, 12, 12, (1u << 12) - 1);  // vacuous h1

    // sum over 8 headers; expected collisions per header:
    // C(2^ell, 2)/2^ell = (2^ell - 1)/2 = 2047.5
    const int headers = 8;
    double total = 0.0;
    for (int i = 0; i < headers; ++i)
        total += static_cast<double>(momentum_bruteforce_oracle(random_h(rng, 12), params).size());
    const double expected = headers * 2047.5;
    const double sigma = std::sqrt(expected);  // Poisson-like spread
    CHECK(std::fabs(total - expected) < 3.0 * sigma);

    CHECK_THROWS_AS(momentum_bruteforce_oracle(0, MomentumParams(8, 15, 8, 255)),
                    std::invalid_argument);
}

TEST_CASE("tight target usually empties the solution set") {
    const MomentumParams params(8, 10, 10, 1);  // P(h1 <= 1) = 2^-7
    const auto oracle = momentum_bruteforce_oracle(0x42, params);
    // ~511 collisions * 2^-7 acceptance: a handful at most
    CHECK(oracle.size() < 40);
}

TEST_CASE("stats count hash evaluations") {
    const MomentumParams params(8, 12, 10, 255);
    MomentumStats stats;
    momentum_mine_all(0x17, params, &stats);
    CHECK(stats.h2_evals == params.subset_size());

    const MomentumResult result = momentum_mine(0x17, params);
    CHECK(result.stats.h2_evals <= params.subset_size());
}

TEST_CASE("solution record round trip") {
    std::mt19937_64 rng(0xabcd);
    const MomentumParams params(8, 12, 12, 255);
    for (int i = 0; i < 20; ++i) {
        const MomentumResult result = momentum_mine(random_h(rng, 8), params);
        REQUIRE(result.solution.has_value());
        const std::string record = solution_to_record(*result.solution, params);
        const auto parsed = solution_from_record(record);
        REQUIRE(parsed.has_value());
        CHECK(parsed->first == *result.solution);
        CHECK(parsed->second.n == params.n);
        CHECK(parsed->second.ell == params.ell);
        CHECK(parsed->second.target == params.target);
        CHECK(momentum_verify(parsed->first, parsed->second));
    }
    CHECK(!solution_from_record("hashcash n=8").has_value());
    CHECK(!solution_from_record("momentum n=8").has_value());
    CHECK(!solution_from_record("momentum n=8 ell=12 target=zz h=1 a=2 b=3").has_value());
}

TEST_CASE("header hash truncation") {
    const BlockHeader header{};
    const MomentumParams params(8, 12, 8, 255);
    const std::uint64_t h = momentum_header_hash(header, params);
    CHECK(h < 256);
    // top-8-bits of sha256(80 zero bytes); first digest byte determines it
    const Digest digest = sha256(serialize(header));
    CHECK(h == digest[0]);
}
