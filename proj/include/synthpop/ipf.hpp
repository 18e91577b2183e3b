#pragma once

#include <string>
#include <utility>
#include <vector>

#include "synthpop/ingest.hpp"

namespace synthpop {

// Dense multi-dimensional count table. Values are stored row-major with the
// last dimension contiguous.
struct ContingencyTable {
    std::vector<std::pair<std::string, std::size_t>> dims; // (attribute, category count)
    std::vector<double> values;

    std::size_t cell_count() const;
    std::size_t stride(std::size_t dim) const;

    // Sum over all cells whose index along `dim` equals `category`.
    double marginal(std::size_t dim, std::size_t category) const;
};

struct ConvergenceReport {
    int iterations = 0;
    double final_max_dev = 0.0;
    bool converged = false;
    std::vector<double> history; // one deviation value per iteration
};

// Classical raking: repeatedly scale each dimension's slices so its marginals
// hit the targets, sweeping dimensions in declaration order. Structural zeros
// of the seed stay exactly zero. One iteration is one full sweep; the fit
// stops when the max absolute marginal deviation drops to `tol` or after
// `max_iters` sweeps.
std::pair<ContingencyTable, ConvergenceReport> fit_ipf(const ContingencyTable& seed,
                                                       const MarginalSet& targets,
                                                       double tol = 1e-6, int max_iters = 1000);

// Cross-tabulates sample persons over the marginal dimensions. Categories are
// matched by band parsing for numeric attributes ("0-17", "18+") and string
// equality otherwise.
ContingencyTable tabulate_sample(const MicroSample& sample, const MarginalSet& marginals);

} // namespace synthpop
