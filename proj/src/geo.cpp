#include "synthpop/geo.hpp"

#include <cmath>
#include <string>

#include "synthpop/error.hpp"

namespace synthpop {

namespace {

bool on_segment(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
    const double cross = (b.lon - a.lon) * (p.lat - a.lat) - (b.lat - a.lat) * (p.lon - a.lon);
    if (cross != 0.0) return false;
    const double min_lat = std::min(a.lat, b.lat), max_lat = std::max(a.lat, b.lat);
    const double min_lon = std::min(a.lon, b.lon), max_lon = std::max(a.lon, b.lon);
    return p.lat >= min_lat && p.lat <= max_lat && p.lon >= min_lon && p.lon <= max_lon;
}

bool on_ring_edge(const GeoPoint& p, const std::vector<GeoPoint>& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++)
        if (on_segment(p, ring[j], ring[i])) return true;
    return false;
}

bool inside_ring(const GeoPoint& p, const std::vector<GeoPoint>& ring) {
    const std::size_t n = ring.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const GeoPoint& a = ring[i];
        const GeoPoint& b = ring[j];
        if ((a.lat > p.lat) != (b.lat > p.lat) &&
            p.lon < (b.lon - a.lon) * (p.lat - a.lat) / (b.lat - a.lat) + a.lon)
            inside = !inside;
    }
    return inside;
}

} // namespace

bool point_in_polygon(const GeoPoint& p, const GeoBoundary& boundary) {
    if (on_ring_edge(p, boundary.outer)) return true;
    if (!inside_ring(p, boundary.outer)) return false;
    for (const auto& hole : boundary.holes) {
        if (on_ring_edge(p, hole)) return true;
        if (inside_ring(p, hole)) return false;
    }
    return true;
}

std::vector<GeoPoint> sample_locations(const DensityGrid& grid, const GeoBoundary& boundary,
                                       std::size_t n, std::optional<double> noise_half_width,
                                       RngStream& rng, int max_attempts_per_point) {
    if (noise_half_width && *noise_half_width < 0.0)
        throw ValidationError("noise half-width must be >= 0");
    if (max_attempts_per_point < 1)
        throw ValidationError("max_attempts_per_point must be >= 1");

    // Subset selection first: cells whose centers fall inside the boundary.
    std::vector<std::size_t> kept;
    std::vector<double> weights;
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
        const GridCell& c = grid.cells[i];
        if (c.density <= 0.0) continue;
        if (!point_in_polygon({c.lat, c.lon}, boundary)) continue;
        kept.push_back(i);
        weights.push_back(c.density);
    }
    if (kept.empty())
        throw InfeasibilityError(
            "no positive-density grid cell center lies inside the boundary; cannot sample locations");

    std::vector<GeoPoint> points;
    points.reserve(n);
    if (n == 0) return points;

    const AliasTable alias(weights);
    for (std::size_t k = 0; k < n; ++k) {
        bool accepted = false;
        std::size_t last_cell = 0;
        for (int attempt = 0; attempt < max_attempts_per_point; ++attempt) {
            last_cell = kept[alias.sample(rng)];
            const GridCell& c = grid.cells[last_cell];
            const double hw = noise_half_width ? *noise_half_width : c.cell_size / 2.0;
            GeoPoint p{c.lat + rng.uniform(-hw, hw), c.lon + rng.uniform(-hw, hw)};
            if (point_in_polygon(p, boundary)) {
                points.push_back(p);
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            const GridCell& c = grid.cells[last_cell];
            throw InfeasibilityError("exhausted " + std::to_string(max_attempts_per_point) +
                                     " attempts jittering around grid cell (" + std::to_string(c.lat) +
                                     ", " + std::to_string(c.lon) + ") without landing in the boundary");
        }
    }
    return points;
}

double point_distance(const GeoPoint& a, const GeoPoint& b, DistanceMode mode) {
    if (mode == DistanceMode::euclidean_degrees) {
        const double dlat = a.lat - b.lat;
        const double dlon = a.lon - b.lon;
        return std::sqrt(dlat * dlat + dlon * dlon);
    }
    // haversine, mean earth radius in km
    constexpr double radius_km = 6371.0;
    constexpr double deg = 3.14159265358979323846 / 180.0;
    const double dlat = (b.lat - a.lat) * deg;
    const double dlon = (b.lon - a.lon) * deg;
    const double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(a.lat * deg) * std::cos(b.lat * deg) *
                         std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * radius_km * std::asin(std::min(1.0, std::sqrt(s)));
}

} // namespace synthpop
