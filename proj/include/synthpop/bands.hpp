#pragma once

#include <optional>
#include <string>

namespace synthpop {

// Numeric category labels: "a-b" is the closed range [a, b], "a+" is
// [a, inf), a bare number matches exactly, "*" matches everything.
struct Band {
    double lo;
    double hi;

    bool contains(double v) const noexcept { return v >= lo && v <= hi; }
};

std::optional<Band> parse_band(const std::string& label);

// True when `value` falls in the band named by `label`; false when the label
// is not a numeric band at all.
bool band_label_matches(const std::string& label, double value);

} // namespace synthpop
