#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace qthreat::pow {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);

// Double SHA-256, the block-header hash.
Digest sha256d(std::span<const std::uint8_t> data);

std::string to_hex(std::span<const std::uint8_t> bytes);
bool from_hex(const std::string& hex, std::span<std::uint8_t> out);

}  // namespace qthreat::pow
