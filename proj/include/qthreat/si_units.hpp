#pragma once

#include <optional>
#include <string>

namespace qthreat::si {

// Parses "66.7M", "50G", "1e12", "4096"... Suffixes k/K, M, G, T, P, E scale
// by powers of 1000.
std::optional<double> parse_si(const std::string& text);

// "3.47e10", unit "H/s" -> "34.7 GH/s"; three significant digits.
std::string format_si(double value, const std::string& unit);

}  // namespace qthreat::si
