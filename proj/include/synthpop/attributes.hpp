#pragma once

#include <string>

#include "synthpop/ingest.hpp"

namespace synthpop {

// Person attributes addressable from marginal tables and constraint specs:
//   age / age_band       -> age, numeric band labels
//   height / height_band -> height, numeric band labels
//   weight / weight_band -> weight, numeric band labels
//   sex, religion, caste, job_label -> string equality ("*" matches all)
// Throws ValidationError for an unknown attribute name.
bool person_matches(const SamplePerson& person, const std::string& attribute,
                    const std::string& category);

// Household attributes:
//   size / hh_size -> member count, numeric band labels
//   any / household -> matches every household
bool household_matches(const SampleHousehold& household, const std::string& attribute,
                       const std::string& category);

bool is_person_attribute(const std::string& attribute);
bool is_household_attribute(const std::string& attribute);

} // namespace synthpop
