#include "synthpop/bands.hpp"

#include <cstdlib>
#include <limits>

namespace synthpop {

namespace {

std::optional<double> parse_number(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') return std::nullopt;
    return v;
}

} // namespace

std::optional<Band> parse_band(const std::string& label) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (label == "*") return Band{-inf, inf};
    if (!label.empty() && label.back() == '+') {
        if (auto lo = parse_number(label.substr(0, label.size() - 1)))
            return Band{*lo, inf};
        return std::nullopt;
    }
    // "a-b": split on a '-' that is not the leading sign
    const auto dash = label.find('-', 1);
    if (dash != std::string::npos) {
        const auto lo = parse_number(label.substr(0, dash));
        const auto hi = parse_number(label.substr(dash + 1));
        if (lo && hi) return Band{*lo, *hi};
        return std::nullopt;
    }
    if (auto v = parse_number(label)) return Band{*v, *v};
    return std::nullopt;
}

bool band_label_matches(const std::string& label, double value) {
    const auto band = parse_band(label);
    return band && band->contains(value);
}

} // namespace synthpop
