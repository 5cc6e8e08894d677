#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qthreat/pow/sha256d.hpp"

namespace qthreat::pow {

using uint256 = boost::multiprecision::uint256_t;

// Hashcash target threshold: a digest passes when, read as a 256-bit
// big-endian integer, it is at most t. Related to difficulty by D = 2^224/t.
struct Target {
    uint256 t;

    explicit Target(uint256 value);

    static Target max();  // 2^256 - 1, every digest passes
};

// t = floor(2^224 / D). Exact integer arithmetic on the binary expansion of D.
Target difficulty_to_target(double difficulty);

// D = 2^224 / t, reported as a floating value.
double target_to_difficulty(const Target& target);

// Big-endian interpretation of the 32-byte digest. (Bitcoin mainnet compares
// in the opposite byte order with a compact-bits encoding; matching mainnet
// blocks is out of scope.)
uint256 digest_to_uint256(const Digest& digest);

std::string target_to_hex(const Target& target);
Target target_from_hex(const std::string& hex);

}  // namespace qthreat::pow
