#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qthreat/pow/sha256d.hpp"

namespace qthreat::pow {

// 80-byte block header. Serialized layout, all integers little-endian:
//   version(4) | prev_hash(32) | merkle_root(32) | timestamp(4) | bits(4) | nonce(4)
// Digest fields are copied verbatim.
struct BlockHeader {
    std::uint32_t version = 0;
    Digest prev_hash{};
    Digest merkle_root{};
    std::uint32_t timestamp = 0;
    std::uint32_t bits = 0;
    std::uint32_t nonce = 0;

    bool operator==(const BlockHeader&) const = default;
};

inline constexpr std::size_t kHeaderBytes = 80;
using HeaderBytes = std::array<std::uint8_t, kHeaderBytes>;

HeaderBytes serialize(const BlockHeader& header);
BlockHeader deserialize(const HeaderBytes& bytes);

// Hex forms (160 lowercase hex characters).
std::string header_to_hex(const BlockHeader& header);
std::optional<BlockHeader> header_from_hex(const std::string& hex);

Digest header_hash(const BlockHeader& header);  // sha256d over the 80 bytes

}  // namespace qthreat::pow
