#include "synthpop/attributes.hpp"

#include "synthpop/bands.hpp"
#include "synthpop/error.hpp"

namespace synthpop {

namespace {

bool string_category_matches(const std::string& value, const std::string& category) {
    return category == "*" || value == category;
}

} // namespace

bool is_person_attribute(const std::string& attribute) {
    return attribute == "age" || attribute == "age_band" || attribute == "height" ||
           attribute == "height_band" || attribute == "weight" || attribute == "weight_band" ||
           attribute == "sex" || attribute == "religion" || attribute == "caste" ||
           attribute == "job_label";
}

bool is_household_attribute(const std::string& attribute) {
    return attribute == "size" || attribute == "hh_size" || attribute == "any" ||
           attribute == "household";
}

bool person_matches(const SamplePerson& person, const std::string& attribute,
                    const std::string& category) {
    if (attribute == "age" || attribute == "age_band")
        return band_label_matches(category, static_cast<double>(person.age));
    if (attribute == "height" || attribute == "height_band")
        return band_label_matches(category, person.height);
    if (attribute == "weight" || attribute == "weight_band")
        return band_label_matches(category, person.weight);
    if (attribute == "sex") return string_category_matches(person.sex, category);
    if (attribute == "religion") return string_category_matches(person.religion, category);
    if (attribute == "caste") return string_category_matches(person.caste, category);
    if (attribute == "job_label") return string_category_matches(person.job_label, category);
    throw ValidationError("unknown person attribute '" + attribute + "'");
}

bool household_matches(const SampleHousehold& household, const std::string& attribute,
                       const std::string& category) {
    if (attribute == "size" || attribute == "hh_size")
        return band_label_matches(category, static_cast<double>(household.members.size()));
    if (attribute == "any" || attribute == "household") return true;
    throw ValidationError("unknown household attribute '" + attribute + "'");
}

} // namespace synthpop
