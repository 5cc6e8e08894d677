#include "qthreat/si_units.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qthreat::si {

std::optional<double> parse_si(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) return std::nullopt;

    double scale = 1.0;
    if (*end != '\0') {
        switch (*end) {
            case 'k': case 'K': scale = 1e3; break;
            case 'M': scale = 1e6; break;
            case 'G': scale = 1e9; break;
            case 'T': scale = 1e12; break;
            case 'P': scale = 1e15; break;
            case 'E': scale = 1e18; break;
            default: return std::nullopt;
        }
        if (*(end + 1) != '\0') return std::nullopt;
    }
    return value * scale;
}

std::string format_si(double value, const std::string& unit) {
    static const struct { double scale; const char* prefix; } kPrefixes[] = {
        {1e18, "E"}, {1e15, "P"}, {1e12, "T"}, {1e9, "G"}, {1e6, "M"}, {1e3, "k"},
    };
    char buf[64];
    const double magnitude = std::fabs(value);
    for (const auto& p : kPrefixes) {
        if (magnitude >= p.scale) {
            std::snprintf(buf, sizeof buf, "%.3g %s%s", value / p.scale, p.prefix, unit.c_str());
            return buf;
        }
    }
    std::snprintf(buf, sizeof buf, "%.3g %s", value, unit.c_str());
    return buf;
}

}  // namespace qthreat::si
