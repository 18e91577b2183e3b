#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "synthpop/geo.hpp"

namespace synthpop {

// One fitted attribute: its categories (declaration order) and the target
// count for each category. All dimensions of a MarginalSet describe the same
// total population, so their target sums agree.
struct MarginalDimension {
    std::string attribute;
    std::vector<std::string> categories;
    std::vector<double> targets;

    double total() const;
};

struct MarginalSet {
    std::vector<MarginalDimension> dimensions;
};

struct SamplePerson {
    int age = 0;
    std::string sex;
    double height = 0.0; // cm
    double weight = 0.0; // kg
    std::string religion;
    std::string caste;
    std::string job_label;
};

struct SampleHousehold {
    std::string id;
    std::vector<SamplePerson> members;
};

struct MicroSample {
    std::vector<SampleHousehold> households;

    std::size_t person_count() const;
};

/// Loads `attribute,category,target` rows; dimension order is first
/// appearance in the file.
MarginalSet load_marginals(const std::filesystem::path& path);

/// Loads `hh_id,age,sex,height,weight,religion,caste,job_label` rows grouped
/// by hh_id, preserving file order within each household. Extra columns are
/// ignored with a warning on stderr.
MicroSample load_seed_sample(const std::filesystem::path& path);

/// Loads a GeoJSON Polygon (bare geometry, Feature, or single-feature
/// FeatureCollection). Rings are stored implicitly closed with consecutive
/// duplicate vertices collapsed.
GeoBoundary load_boundary(const std::filesystem::path& path);

/// Loads `lat,lon,cell_size,density` rows in file order. Zero-density cells
/// are retained; they are legal but never sampled.
DensityGrid load_density_grid(const std::filesystem::path& path);

} // namespace synthpop
