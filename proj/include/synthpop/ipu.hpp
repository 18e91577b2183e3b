#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "synthpop/ingest.hpp"
#include "synthpop/ipf.hpp"

namespace synthpop {

enum class ConstraintLevel { household, person };

// One conjunction term: the entity must match `category` on `attribute`.
struct ConstraintTerm {
    std::string attribute;
    std::string category;
};

struct Constraint {
    std::string name;
    ConstraintLevel level = ConstraintLevel::person;
    std::vector<ConstraintTerm> terms; // all terms must hold (conjunction)
    double target = 0.0;
};

// Ordered constraint list. Household-level constraints come before
// person-level ones; names are unique; targets are >= 0.
struct ConstraintSpec {
    std::vector<Constraint> constraints;

    void validate() const;
};

// rows = constraints, columns = sample households. A household-level entry is
// 0/1; a person-level entry counts matching members.
struct IncidenceMatrix {
    std::size_t n_constraints = 0;
    std::size_t n_households = 0;
    std::vector<std::string> row_names;
    std::vector<double> entries; // row-major

    double at(std::size_t constraint, std::size_t household) const {
        return entries[constraint * n_households + household];
    }
    double& at(std::size_t constraint, std::size_t household) {
        return entries[constraint * n_households + household];
    }
};

IncidenceMatrix build_incidence(const MicroSample& sample, const ConstraintSpec& spec);

// Mean relative deviation of the weighted constraint sums from their targets.
// Zero-target constraints contribute their absolute weighted sum.
double goodness_delta(const IncidenceMatrix& incidence, std::span<const double> weights,
                      std::span<const double> targets);

// Iterative proportional updating: weights start at one; each iteration
// passes over the constraints in order and rescales the households touching
// constraint i so its weighted sum hits the target exactly. Stops when the
// goodness delta reaches `tol`, when the delta improves by less than 1e-12
// between iterations, or after `max_iters` passes.
std::pair<std::vector<double>, ConvergenceReport> fit_ipu(const IncidenceMatrix& incidence,
                                                          const std::vector<double>& targets,
                                                          double tol = 0.05, int max_iters = 2000);

} // namespace synthpop
