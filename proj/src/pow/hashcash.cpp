#include "qthreat/pow/hashcash.hpp"

#include <stdexcept>

namespace qthreat::pow {

bool hashcash_verify(const BlockHeader& header, const Target& target) {
    return digest_to_uint256(header_hash(header)) <= target.t;
}

HashcashResult hashcash_mine(const BlockHeader& header_template, const Target& target,
                             const HashcashSearch& search) {
    if (search.nonce_end > (std::uint64_t{1} << 32) || search.nonce_begin > search.nonce_end)
        throw std::invalid_argument("nonce range must lie within [0, 2^32]");
    if (search.timestamp_bits < 0 || search.timestamp_bits > 32)
        throw std::invalid_argument("timestamp width must lie in [0, 32]");

    const std::uint64_t ts_variants = std::uint64_t{1} << search.timestamp_bits;
    const std::uint32_t ts_mask =
        search.timestamp_bits == 32 ? ~std::uint32_t{0}
                                    : (std::uint32_t{1} << search.timestamp_bits) - 1;

    HashcashResult result;
    BlockHeader header = header_template;
    for (std::uint64_t ts = 0; ts < ts_variants; ++ts) {
        header.timestamp = (header_template.timestamp & ~ts_mask) | static_cast<std::uint32_t>(ts);
        for (std::uint64_t nonce = search.nonce_begin; nonce < search.nonce_end; ++nonce) {
            header.nonce = static_cast<std::uint32_t>(nonce);
            ++result.attempts;
            if (hashcash_verify(header, target)) {
                result.header = header;
                return result;
            }
        }
    }
    return result;
}

double expected_hashes(double difficulty) {
    if (!(difficulty >= 1.0)) throw std::invalid_argument("difficulty must be >= 1");
    return difficulty * 4294967296.0;
}

}  // namespace qthreat::pow
