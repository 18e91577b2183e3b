#include "synthpop/ipu.hpp"

#include <cmath>
#include <set>

#include "synthpop/attributes.hpp"
#include "synthpop/error.hpp"

namespace synthpop {

void ConstraintSpec::validate() const {
    std::set<std::string> names;
    bool seen_person = false;
    for (const auto& constraint : constraints) {
        if (!names.insert(constraint.name).second)
            throw ValidationError("duplicate constraint name '" + constraint.name + "'");
        if (constraint.target < 0.0 || !std::isfinite(constraint.target))
            throw ValidationError("constraint '" + constraint.name + "' has an invalid target");
        if (constraint.terms.empty())
            throw ValidationError("constraint '" + constraint.name + "' has no predicate terms");
        if (constraint.level == ConstraintLevel::person) {
            seen_person = true;
        } else if (seen_person) {
            throw ValidationError("household-level constraint '" + constraint.name +
                                  "' listed after a person-level constraint");
        }
    }
}

IncidenceMatrix build_incidence(const MicroSample& sample, const ConstraintSpec& spec) {
    spec.validate();

    IncidenceMatrix m;
    m.n_constraints = spec.constraints.size();
    m.n_households = sample.households.size();
    m.entries.assign(m.n_constraints * m.n_households, 0.0);

    for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
        const Constraint& constraint = spec.constraints[i];
        m.row_names.push_back(constraint.name);
        for (const auto& term : constraint.terms) {
            const bool known = constraint.level == ConstraintLevel::household
                                   ? is_household_attribute(term.attribute)
                                   : is_person_attribute(term.attribute);
            if (!known)
                throw ValidationError("constraint '" + constraint.name +
                                      "' references unknown attribute '" + term.attribute + "'");
        }

        for (std::size_t j = 0; j < sample.households.size(); ++j) {
            const SampleHousehold& household = sample.households[j];
            if (constraint.level == ConstraintLevel::household) {
                bool all = true;
                for (const auto& term : constraint.terms)
                    all = all && household_matches(household, term.attribute, term.category);
                m.at(i, j) = all ? 1.0 : 0.0;
            } else {
                double count = 0.0;
                for (const auto& person : household.members) {
                    bool all = true;
                    for (const auto& term : constraint.terms)
                        all = all && person_matches(person, term.attribute, term.category);
                    if (all) count += 1.0;
                }
                m.at(i, j) = count;
            }
        }
    }
    return m;
}

double goodness_delta(const IncidenceMatrix& incidence, std::span<const double> weights,
                      std::span<const double> targets) {
    if (weights.size() != incidence.n_households || targets.size() != incidence.n_constraints)
        throw ValidationError("goodness_delta: shape mismatch");
    if (incidence.n_constraints == 0) return 0.0;

    double sum = 0.0;
    for (std::size_t i = 0; i < incidence.n_constraints; ++i) {
        double weighted = 0.0;
        for (std::size_t j = 0; j < incidence.n_households; ++j)
            weighted += incidence.at(i, j) * weights[j];
        if (targets[i] > 0.0)
            sum += std::abs(weighted - targets[i]) / targets[i];
        else
            sum += std::abs(weighted);
    }
    return sum / static_cast<double>(incidence.n_constraints);
}

std::pair<std::vector<double>, ConvergenceReport> fit_ipu(const IncidenceMatrix& incidence,
                                                          const std::vector<double>& targets,
                                                          double tol, int max_iters) {
    if (!(tol > 0.0)) throw ValidationError("IPU tolerance must be > 0");
    if (max_iters < 1) throw ValidationError("IPU max_iters must be >= 1");
    if (targets.size() != incidence.n_constraints)
        throw ValidationError("IPU: target count does not match incidence rows");

    auto row_name = [&](std::size_t i) {
        return i < incidence.row_names.size() ? incidence.row_names[i]
                                              : "#" + std::to_string(i);
    };

    for (std::size_t i = 0; i < incidence.n_constraints; ++i) {
        if (targets[i] <= 0.0) continue;
        bool any = false;
        for (std::size_t j = 0; j < incidence.n_households && !any; ++j)
            any = incidence.at(i, j) > 0.0;
        if (!any)
            throw InfeasibilityError("IPU constraint '" + row_name(i) +
                                     "' has a positive target but no contributing household");
    }

    std::vector<double> weights(incidence.n_households, 1.0);
    ConvergenceReport report;

    for (int iter = 0; iter < max_iters; ++iter) {
        for (std::size_t i = 0; i < incidence.n_constraints; ++i) {
            double weighted = 0.0;
            for (std::size_t j = 0; j < incidence.n_households; ++j)
                weighted += incidence.at(i, j) * weights[j];
            if (weighted > 0.0) {
                const double scale = targets[i] / weighted;
                for (std::size_t j = 0; j < incidence.n_households; ++j)
                    if (incidence.at(i, j) > 0.0) weights[j] *= scale;
            } else if (targets[i] > 0.0) {
                throw InfeasibilityError("IPU constraint '" + row_name(i) +
                                         "' starved: weighted sum is zero but target is " +
                                         std::to_string(targets[i]));
            }
            // weighted == 0 with target 0: nothing to do
        }

        const double delta = goodness_delta(incidence, weights, targets);
        report.history.push_back(delta);
        report.iterations = iter + 1;
        report.final_max_dev = delta;
        if (delta <= tol) {
            report.converged = true;
            break;
        }
        if (report.history.size() >= 2 &&
            std::abs(report.history[report.history.size() - 2] - delta) < 1e-12)
            break; // stalled
    }
    return {std::move(weights), std::move(report)};
}

} // namespace synthpop
