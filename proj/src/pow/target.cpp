#include "qthreat/pow/target.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qthreat::pow {

namespace mp = boost::multiprecision;
using uint512 = mp::uint512_t;

Target::Target(uint256 value) : t(std::move(value)) {
    if (t == 0) throw std::invalid_argument("target must be >= 1");
}

Target Target::max() {
    uint256 v = 0;
    return Target(~v);
}

Target difficulty_to_target(double difficulty) {
    if (!(difficulty >= 1.0)) throw std::invalid_argument("difficulty must be >= 1");

    // Split D into an exact 53-bit mantissa and exponent, then divide in
    // integer arithmetic: floor(2^224 / (m * 2^e)) = floor(2^(224-e) / m).
    int exponent = 0;
    const double mantissa = std::frexp(difficulty, &exponent);  // in [0.5, 1)
    const auto m = static_cast<std::uint64_t>(std::ldexp(mantissa, 53));
    const int shift = 224 - (exponent - 53);

    uint512 numerator = 1;
    numerator <<= shift;
    const uint512 t = numerator / m;
    if (t == 0) throw std::invalid_argument("difficulty too large for a 256-bit target");
    return Target(static_cast<uint256>(t));
}

double target_to_difficulty(const Target& target) {
    using big_float = mp::cpp_bin_float_quad;
    uint256 numerator = 1;
    // 2^224 as a 256-bit value.
    numerator <<= 224;
    const big_float d = big_float(numerator) / big_float(target.t);
    return d.convert_to<double>();
}

uint256 digest_to_uint256(const Digest& digest) {
    uint256 v = 0;
    for (std::uint8_t byte : digest) {
        v <<= 8;
        v |= byte;
    }
    return v;
}

std::string target_to_hex(const Target& target) {
    std::ostringstream oss;
    oss << std::hex << target.t;
    return oss.str();
}

Target target_from_hex(const std::string& hex) {
    if (hex.empty()) throw std::invalid_argument("empty target");
    uint256 v;
    std::istringstream iss(hex);
    iss >> std::hex >> v;
    if (iss.fail() || !iss.eof()) throw std::invalid_argument("malformed target hex");
    return Target(v);
}

}  // namespace qthreat::pow
