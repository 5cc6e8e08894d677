#pragma once

#include <cstdint>
#include <optional>

#include "qthreat/pow/block_header.hpp"
#include "qthreat/pow/target.hpp"

namespace qthreat::pow {

// Search space for the miner: a nonce range [nonce_begin, nonce_end) scanned
// fastest, then the low timestamp_bits bits of the template timestamp. With
// the defaults the full 2^32 nonce space is scanned once.
struct HashcashSearch {
    std::uint64_t nonce_begin = 0;
    std::uint64_t nonce_end = std::uint64_t{1} << 32;
    int timestamp_bits = 0;
};

struct HashcashResult {
    std::optional<BlockHeader> header;  // empty when the space was exhausted
    std::uint64_t attempts = 0;         // hashes evaluated
};

// One hash evaluation: sha256d(header) <= t under the big-endian digest
// convention.
bool hashcash_verify(const BlockHeader& header, const Target& target);

// Deterministic scan for the first header satisfying the target. Exhaustion
// is an explicit result, not an error.
HashcashResult hashcash_mine(const BlockHeader& header_template, const Target& target,
                             const HashcashSearch& search = {});

// Expected hashes to mine one block at difficulty D: D * 2^32.
double expected_hashes(double difficulty);

}  // namespace qthreat::pow
