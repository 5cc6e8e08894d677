#include "qthreat/pow/block_header.hpp"

#include <cstring>

namespace qthreat::pow {

namespace {

void put_u32le(std::uint8_t* out, std::uint32_t v) {
    out[0] = static_cast<std::uint8_t>(v);
    out[1] = static_cast<std::uint8_t>(v >> 8);
    out[2] = static_cast<std::uint8_t>(v >> 16);
    out[3] = static_cast<std::uint8_t>(v >> 24);
}

std::uint32_t get_u32le(const std::uint8_t* in) {
    return static_cast<std::uint32_t>(in[0]) | static_cast<std::uint32_t>(in[1]) << 8 |
           static_cast<std::uint32_t>(in[2]) << 16 | static_cast<std::uint32_t>(in[3]) << 24;
}

}  // namespace

HeaderBytes serialize(const BlockHeader& header) {
    HeaderBytes bytes;
    put_u32le(bytes.data(), header.version);
    std::memcpy(bytes.data() + 4, header.prev_hash.data(), 32);
    std::memcpy(bytes.data() + 36, header.merkle_root.data(), 32);
    put_u32le(bytes.data() + 68, header.timestamp);
    put_u32le(bytes.data() + 72, header.bits);
    put_u32le(bytes.data() + 76, header.nonce);
    return bytes;
}

BlockHeader deserialize(const HeaderBytes& bytes) {
    BlockHeader header;
    header.version = get_u32le(bytes.data());
    std::memcpy(header.prev_hash.data(), bytes.data() + 4, 32);
    std::memcpy(header.merkle_root.data(), bytes.data() + 36, 32);
    header.timestamp = get_u32le(bytes.data() + 68);
    header.bits = get_u32le(bytes.data() + 72);
    header.nonce = get_u32le(bytes.data() + 76);
    return header;
}

std::string header_to_hex(const BlockHeader& header) {
    const HeaderBytes bytes = serialize(header);
    return to_hex(bytes);
}

std::optional<BlockHeader> header_from_hex(const std::string& hex) {
    HeaderBytes bytes;
    if (!from_hex(hex, bytes)) return std::nullopt;
    return deserialize(bytes);
}

Digest header_hash(const BlockHeader& header) {
    const HeaderBytes bytes = serialize(header);
    return sha256d(bytes);
}

}  // namespace qthreat::pow
