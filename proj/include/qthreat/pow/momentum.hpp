#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qthreat/pow/block_header.hpp"

namespace qthreat::pow {

// Collision proof-of-work parameters. h1 is SHA-256 truncated to the top n
// bits; h2 is SHA-256 with a one-byte domain prefix 0x02, truncated to the
// top ell bits. Nonces are ell-bit values; the miner scans the subset
// S = [0, 2^subset_bits).
struct MomentumParams {
    int n;                 // h1 output bits, 1..64
    int ell;               // h2 output bits and nonce width, n <= ell <= 64
    int subset_bits;       // log2 |S|, 0..ell
    std::uint64_t target;  // h1 threshold, 1 <= target < 2^n

    MomentumParams(int n_bits, int ell_bits, int subset_log2, std::uint64_t h1_target);

    std::uint64_t subset_size() const { return std::uint64_t{1} << subset_bits; }
};

// A solution: header hash H and distinct nonces a < b with colliding h2
// digests and h1(H||a||b) <= target.
struct MomentumSolution {
    std::uint64_t h;
    std::uint64_t a;
    std::uint64_t b;

    bool operator==(const MomentumSolution&) const = default;
};

struct MomentumStats {
    std::uint64_t h2_evals = 0;
    std::uint64_t h1_evals = 0;
};

struct MomentumResult {
    std::optional<MomentumSolution> solution;
    MomentumStats stats;
};

// H = h1(header): the top n bits of a single SHA-256 over the 80 serialized
// header bytes.
std::uint64_t momentum_header_hash(const BlockHeader& header, const MomentumParams& params);

std::uint64_t momentum_h1(std::uint64_t h, std::uint64_t a, std::uint64_t b,
                          const MomentumParams& params);
std::uint64_t momentum_h2(std::uint64_t h, std::uint64_t nonce, const MomentumParams& params);

// Scans S in nonce order, keeping a digest -> nonces table; collision pairs
// are tested oldest-first, so the search is deterministic. Returns the first
// solution, or not-found after exhausting S.
MomentumResult momentum_mine(std::uint64_t h, const MomentumParams& params);

// Same scan, collecting every solution in discovery order.
std::vector<MomentumSolution> momentum_mine_all(std::uint64_t h, const MomentumParams& params,
                                                MomentumStats* stats = nullptr);

// Constant work: two h2 calls and one h1 call.
bool momentum_verify(const MomentumSolution& solution, const MomentumParams& params);

// Exhaustive test oracle over every pair a < b < 2^ell; rejects ell > 14.
std::vector<MomentumSolution> momentum_bruteforce_oracle(std::uint64_t h,
                                                         const MomentumParams& params);

// Flat one-line record: "momentum n=<dec> ell=<dec> target=<hex> h=<hex> a=<hex> b=<hex>".
std::string solution_to_record(const MomentumSolution& solution, const MomentumParams& params);
std::optional<std::pair<MomentumSolution, MomentumParams>> solution_from_record(
    const std::string& record);

}  // namespace qthreat::pow
