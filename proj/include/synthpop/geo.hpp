#pragma once

#include <optional>
#include <vector>

#include "synthpop/rng.hpp"

namespace synthpop {

struct GeoPoint {
    double lat = 0.0; // degrees, WGS84
    double lon = 0.0;

    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

// Polygon with optional holes. Rings are implicitly closed (the last vertex
// connects back to the first) and hold at least 3 distinct vertices.
struct GeoBoundary {
    std::vector<GeoPoint> outer;
    std::vector<std::vector<GeoPoint>> holes;
};

struct GridCell {
    double lat = 0.0;       // cell center
    double lon = 0.0;
    double cell_size = 0.0; // degrees per side
    double density = 0.0;   // population weight, >= 0
};

struct DensityGrid {
    std::vector<GridCell> cells;
};

// Even-odd ray-casting test. Points exactly on a ring edge count as inside.
bool point_in_polygon(const GeoPoint& p, const GeoBoundary& boundary);

// Density-weighted location sampling: keep grid cells whose centers lie in
// the boundary, draw cells with replacement proportionally to density, jitter
// each draw by independent uniform noise per axis and reject-and-redraw
// points that land outside. `noise_half_width` of nullopt means half of the
// drawn cell's own size.
std::vector<GeoPoint> sample_locations(const DensityGrid& grid, const GeoBoundary& boundary,
                                       std::size_t n, std::optional<double> noise_half_width,
                                       RngStream& rng, int max_attempts_per_point = 1000);

// Distance used for inverse-distance facility choice.
enum class DistanceMode { euclidean_degrees, haversine_km };

double point_distance(const GeoPoint& a, const GeoPoint& b, DistanceMode mode);

} // namespace synthpop
