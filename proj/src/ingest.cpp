#include "synthpop/ingest.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include "json.hpp"

#include "synthpop/csv.hpp"
#include "synthpop/error.hpp"

namespace synthpop {

double MarginalDimension::total() const {
    double sum = 0.0;
    for (double t : targets) sum += t;
    return sum;
}

std::size_t MicroSample::person_count() const {
    std::size_t n = 0;
    for (const auto& hh : households) n += hh.members.size();
    return n;
}

MarginalSet load_marginals(const std::filesystem::path& path) {
    CsvReader reader(path);
    reader.require_header({"attribute", "category", "target"});

    MarginalSet set;
    std::map<std::string, std::size_t> dim_index;
    std::vector<std::string> fields;
    while (reader.next_row(fields)) {
        if (fields.size() != 3)
            throw ValidationError(path.string() + ":" + std::to_string(reader.line_number()) +
                                  ": expected 3 fields, got " + std::to_string(fields.size()));
        const std::string& attribute = fields[0];
        const std::string& category = fields[1];
        const double target = parse_double_field(fields[2], path, reader.line_number(), "target");
        if (target < 0.0)
            throw ValidationError(path.string() + ":" + std::to_string(reader.line_number()) +
                                  ": negative target for " + attribute + "/" + category);

        auto [it, inserted] = dim_index.try_emplace(attribute, set.dimensions.size());
        if (inserted) set.dimensions.push_back({attribute, {}, {}});
        MarginalDimension& dim = set.dimensions[it->second];
        for (const auto& existing : dim.categories)
            if (existing == category)
                throw ValidationError(path.string() + ":" + std::to_string(reader.line_number()) +
                                      ": duplicate category '" + category + "' in dimension '" +
                                      attribute + "'");
        dim.categories.push_back(category);
        dim.targets.push_back(target);
    }

    if (set.dimensions.empty())
        throw ValidationError(path.string() + ": no dimensions (file has no data rows)");

    // All dimensions describe the same total population.
    const double t0 = set.dimensions.front().total();
    for (std::size_t d = 1; d < set.dimensions.size(); ++d) {
        const double td = set.dimensions[d].total();
        const double scale = std::max({std::abs(t0), std::abs(td), 1.0});
        if (std::abs(td - t0) > 1e-6 * scale)
            throw ValidationError(path.string() + ": dimension totals disagree: '" +
                                  set.dimensions.front().attribute + "' sums to " + format_double(t0) +
                                  " but '" + set.dimensions[d].attribute + "' sums to " +
                                  format_double(td));
    }
    return set;
}

MicroSample load_seed_sample(const std::filesystem::path& path) {
    CsvReader reader(path);
    const std::vector<std::string> expected = {"hh_id", "age",      "sex",   "height",
                                               "weight", "religion", "caste", "job_label"};
    reader.require_header(expected, /*allow_extra=*/true);
    if (reader.header().size() > expected.size()) {
        std::cerr << "warning: " << path.string() << ": ignoring extra column(s):";
        for (std::size_t i = expected.size(); i < reader.header().size(); ++i)
            std::cerr << " '" << reader.header()[i] << "'";
        std::cerr << "\n";
    }

    MicroSample sample;
    std::map<std::string, std::size_t> hh_index;
    std::vector<std::string> fields;
    while (reader.next_row(fields)) {
        const std::size_t line = reader.line_number();
        if (fields.size() < expected.size())
            throw ValidationError(path.string() + ":" + std::to_string(line) + ": expected at least " +
                                  std::to_string(expected.size()) + " fields, got " +
                                  std::to_string(fields.size()));
        SamplePerson person;
        person.age = static_cast<int>(parse_int_field(fields[1], path, line, "age"));
        person.sex = fields[2];
        person.height = parse_double_field(fields[3], path, line, "height");
        person.weight = parse_double_field(fields[4], path, line, "weight");
        person.religion = fields[5];
        person.caste = fields[6];
        person.job_label = fields[7];

        if (person.age < 0 || person.age > 120)
            throw ValidationError(path.string() + ":" + std::to_string(line) + ": age " +
                                  std::to_string(person.age) + " outside [0, 120]");
        if (!(person.height > 0.0) || person.height > 272.0)
            throw ValidationError(path.string() + ":" + std::to_string(line) + ": height " +
                                  format_double(person.height) + " outside (0, 272]");
        if (!(person.weight > 0.0) || person.weight > 500.0)
            throw ValidationError(path.string() + ":" + std::to_string(line) + ": weight " +
                                  format_double(person.weight) + " outside (0, 500]");

        auto [it, inserted] = hh_index.try_emplace(fields[0], sample.households.size());
        if (inserted) sample.households.push_back({fields[0], {}});
        sample.households[it->second].members.push_back(std::move(person));
    }

    if (sample.households.empty())
        throw ValidationError(path.string() + ": sample has no persons");
    return sample;
}

namespace {

std::vector<GeoPoint> parse_ring(const nlohmann::json& coords, const std::filesystem::path& path,
                                 std::size_t ring_index) {
    const std::string where = path.string() + ": ring " + std::to_string(ring_index);
    if (!coords.is_array() || coords.size() < 3)
        throw ValidationError(where + ": a ring needs at least 3 vertices");

    std::vector<GeoPoint> ring;
    ring.reserve(coords.size());
    for (const auto& vertex : coords) {
        if (!vertex.is_array() || vertex.size() < 2)
            throw ValidationError(where + ": vertex is not a [lon, lat] pair");
        // GeoJSON stores positions as [lon, lat].
        const double lon = vertex[0].get<double>();
        const double lat = vertex[1].get<double>();
        if (lat < -90.0 || lat > 90.0 || lon < -180.0 || lon > 180.0)
            throw ValidationError(where + ": vertex (" + format_double(lat) + ", " +
                                  format_double(lon) + ") outside valid lat/lon range");
        const GeoPoint p{lat, lon};
        if (!ring.empty() && ring.back() == p) continue; // collapse repeats
        ring.push_back(p);
    }
    // Implicit closure: drop a repeated first vertex at the end.
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    if (ring.size() < 3)
        throw ValidationError(where + ": fewer than 3 distinct vertices after collapsing repeats");
    return ring;
}

const nlohmann::json& unwrap_polygon(const nlohmann::json& node, const std::filesystem::path& path) {
    const std::string type = node.value("type", "");
    if (type == "Polygon") return node;
    if (type == "Feature") {
        if (!node.contains("geometry"))
            throw ValidationError(path.string() + ": Feature has no geometry");
        return unwrap_polygon(node.at("geometry"), path);
    }
    if (type == "FeatureCollection") {
        const auto& features = node.value("features", nlohmann::json::array());
        if (features.size() != 1)
            throw ValidationError(path.string() + ": expected exactly one feature, found " +
                                  std::to_string(features.size()));
        return unwrap_polygon(features[0], path);
    }
    throw ValidationError(path.string() + ": unsupported geometry type '" + type +
                          "', expected a single Polygon");
}

} // namespace

GeoBoundary load_boundary(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(path.string() + ": invalid JSON: " + e.what());
    }

    const nlohmann::json& polygon = unwrap_polygon(doc, path);
    const auto& rings = polygon.value("coordinates", nlohmann::json::array());
    if (rings.empty())
        throw ValidationError(path.string() + ": Polygon has no rings");

    GeoBoundary boundary;
    boundary.outer = parse_ring(rings[0], path, 0);
    for (std::size_t r = 1; r < rings.size(); ++r)
        boundary.holes.push_back(parse_ring(rings[r], path, r));
    return boundary;
}

DensityGrid load_density_grid(const std::filesystem::path& path) {
    CsvReader reader(path);
    reader.require_header({"lat", "lon", "cell_size", "density"});

    DensityGrid grid;
    std::vector<std::string> fields;
    while (reader.next_row(fields)) {
        const std::size_t line = reader.line_number();
        if (fields.size() != 4)
            throw ValidationError(path.string() + ":" + std::to_string(line) +
                                  ": expected 4 fields, got " + std::to_string(fields.size()));
        GridCell cell;
        cell.lat = parse_double_field(fields[0], path, line, "lat");
        cell.lon = parse_double_field(fields[1], path, line, "lon");
        cell.cell_size = parse_double_field(fields[2], path, line, "cell_size");
        cell.density = parse_double_field(fields[3], path, line, "density");
        if (cell.lat < -90.0 || cell.lat > 90.0 || cell.lon < -180.0 || cell.lon > 180.0)
            throw ValidationError(path.string() + ":" + std::to_string(line) +
                                  ": cell center outside valid lat/lon range");
        if (cell.cell_size < 0.0)
            throw ValidationError(path.string() + ":" + std::to_string(line) + ": negative cell size");
        if (cell.density < 0.0)
            throw ValidationError(path.string() + ":" + std::to_string(line) + ": negative density");
        grid.cells.push_back(cell);
    }
    return grid;
}

} // namespace synthpop
