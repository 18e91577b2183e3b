#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synthpop/geo.hpp"

namespace synthpop {

// Emission order of the comorbidity flag columns.
inline constexpr std::array<const char*, 10> kComorbidityNames = {
    "Fever",   "Diarrhea", "Cataract", "Heart_disease", "Diabetes",
    "Leprosy", "Cancer",   "Asthma",   "Paralysis",     "Epilepsy",
};

enum class PersonCategory { unassigned, student, homebound, employed };

struct Person {
    std::uint64_t agent_id = 0;
    std::uint64_t hhid = 0;
    int age = 0;
    std::string sex;
    double height = 0.0;
    double weight = 0.0;
    std::string religion;
    std::string caste;
    std::uint64_t psuid = 0; // 1-based index of the source sample household

    // Assignment-stage fields. job_label starts as the cloned sample label
    // and is overwritten once the person is classified.
    PersonCategory category = PersonCategory::unassigned;
    std::string job_label;
    int job_id = -1; // -1 until assigned; 0 = Homebound, 199 = Student
    std::uint64_t workplace_id = 0;
    std::optional<GeoPoint> work_location;
    std::uint64_t school_id = 0;
    std::optional<GeoPoint> school_location;
    std::uint64_t public_place_id = 0;
    std::optional<GeoPoint> public_place_location;
    int essential_worker = -1;
    int public_transport = -1;
    double adherence = -1.0;
    std::array<int, 10> comorbidities{-1, -1, -1, -1, -1, -1, -1, -1, -1, -1};
};

struct Household {
    std::uint64_t hhid = 0;
    std::uint64_t psuid = 0;
    std::string admin_unit;
    GeoPoint admin_centroid;
    std::optional<GeoPoint> home;
    std::vector<std::size_t> member_indices; // into Population::persons
};

struct Population {
    std::string district;
    std::vector<Household> households;
    std::vector<Person> persons;
};

} // namespace synthpop
