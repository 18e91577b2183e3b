#include "synthpop/ipf.hpp"

#include <algorithm>
#include <cmath>

#include "synthpop/attributes.hpp"
#include "synthpop/error.hpp"

namespace synthpop {

std::size_t ContingencyTable::cell_count() const {
    std::size_t n = 1;
    for (const auto& [name, count] : dims) n *= count;
    return dims.empty() ? 0 : n;
}

std::size_t ContingencyTable::stride(std::size_t dim) const {
    std::size_t s = 1;
    for (std::size_t d = dim + 1; d < dims.size(); ++d) s *= dims[d].second;
    return s;
}

double ContingencyTable::marginal(std::size_t dim, std::size_t category) const {
    const std::size_t s = stride(dim);
    const std::size_t count = dims[dim].second;
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if ((i / s) % count == category) sum += values[i];
    return sum;
}

namespace {

std::string format_target(const std::string& attribute, const std::string& category) {
    return "'" + attribute + "=" + category + "'";
}

void check_shapes(const ContingencyTable& seed, const MarginalSet& targets) {
    if (seed.dims.size() != targets.dimensions.size())
        throw ValidationError("IPF shape mismatch: seed has " + std::to_string(seed.dims.size()) +
                              " dimensions, targets have " +
                              std::to_string(targets.dimensions.size()));
    for (std::size_t d = 0; d < seed.dims.size(); ++d) {
        const auto& [name, count] = seed.dims[d];
        const auto& dim = targets.dimensions[d];
        if (name != dim.attribute)
            throw ValidationError("IPF shape mismatch: dimension " + std::to_string(d) +
                                  " is '" + name + "' in the seed but '" + dim.attribute +
                                  "' in the targets");
        if (count != dim.categories.size())
            throw ValidationError("IPF shape mismatch: dimension '" + name + "' has " +
                                  std::to_string(count) + " seed categories but " +
                                  std::to_string(dim.categories.size()) + " targets");
    }
    if (seed.values.size() != seed.cell_count())
        throw ValidationError("contingency table value count does not match its dimensions");
    for (double v : seed.values)
        if (v < 0.0 || !std::isfinite(v))
            throw ValidationError("contingency table cells must be finite and >= 0");
}

} // namespace

std::pair<ContingencyTable, ConvergenceReport> fit_ipf(const ContingencyTable& seed,
                                                       const MarginalSet& targets, double tol,
                                                       int max_iters) {
    if (!(tol > 0.0)) throw ValidationError("IPF tolerance must be > 0");
    if (max_iters < 1) throw ValidationError("IPF max_iters must be >= 1");
    check_shapes(seed, targets);

    // A positive target must be reachable from at least one positive seed cell.
    for (std::size_t d = 0; d < seed.dims.size(); ++d) {
        const auto& dim = targets.dimensions[d];
        for (std::size_t c = 0; c < dim.targets.size(); ++c)
            if (dim.targets[c] > 0.0 && seed.marginal(d, c) <= 0.0)
                throw InfeasibilityError("IPF target " + format_target(dim.attribute,
                                                                       dim.categories[c]) +
                                         " is positive but every contributing seed cell is zero");
    }

    ContingencyTable table = seed;
    const std::size_t n_dims = table.dims.size();
    ConvergenceReport report;

    for (int iter = 0; iter < max_iters; ++iter) {
        // One sweep: scale each dimension in declaration order.
        for (std::size_t d = 0; d < n_dims; ++d) {
            const std::size_t s = table.stride(d);
            const std::size_t count = table.dims[d].second;
            const auto& dim = targets.dimensions[d];

            std::vector<double> sums(count, 0.0);
            for (std::size_t i = 0; i < table.values.size(); ++i)
                sums[(i / s) % count] += table.values[i];

            std::vector<double> factors(count, 1.0);
            for (std::size_t c = 0; c < count; ++c) {
                if (sums[c] > 0.0) {
                    factors[c] = dim.targets[c] / sums[c];
                } else if (dim.targets[c] > 0.0) {
                    throw InfeasibilityError("IPF target " +
                                             format_target(dim.attribute, dim.categories[c]) +
                                             " became unreachable: its marginal collapsed to zero");
                }
            }
            for (std::size_t i = 0; i < table.values.size(); ++i)
                table.values[i] *= factors[(i / s) % count];
        }

        double max_dev = 0.0;
        for (std::size_t d = 0; d < n_dims; ++d) {
            const auto& dim = targets.dimensions[d];
            for (std::size_t c = 0; c < dim.targets.size(); ++c)
                max_dev = std::max(max_dev, std::abs(table.marginal(d, c) - dim.targets[c]));
        }

        report.history.push_back(max_dev);
        report.iterations = iter + 1;
        report.final_max_dev = max_dev;
        if (max_dev <= tol) {
            report.converged = true;
            break;
        }
    }
    return {std::move(table), std::move(report)};
}

ContingencyTable tabulate_sample(const MicroSample& sample, const MarginalSet& marginals) {
    ContingencyTable table;
    for (const auto& dim : marginals.dimensions) {
        if (dim.categories.empty())
            throw ValidationError("marginal dimension '" + dim.attribute + "' has no categories");
        table.dims.emplace_back(dim.attribute, dim.categories.size());
    }
    table.values.assign(table.cell_count(), 0.0);

    for (const auto& household : sample.households) {
        for (const auto& person : household.members) {
            std::size_t index = 0;
            for (std::size_t d = 0; d < marginals.dimensions.size(); ++d) {
                const auto& dim = marginals.dimensions[d];
                std::size_t category = dim.categories.size();
                for (std::size_t c = 0; c < dim.categories.size(); ++c) {
                    if (person_matches(person, dim.attribute, dim.categories[c])) {
                        category = c;
                        break; // first matching category wins
                    }
                }
                if (category == dim.categories.size())
                    throw ValidationError("sample person in household '" + household.id +
                                          "' matches no category of marginal dimension '" +
                                          dim.attribute + "'");
                index = index * dim.categories.size() + category;
            }
            table.values[index] += 1.0;
        }
    }
    return table;
}

} // namespace synthpop
