#include "synthpop/rng.hpp"

#include <deque>

namespace synthpop {

AliasTable::AliasTable(std::span<const double> weights) {
    const std::size_t n = weights.size();
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ValidationError("alias table weight < 0");
        total += w;
    }
    if (n == 0 || !(total > 0.0))
        throw InfeasibilityError("alias table needs at least one positive weight");

    prob_.assign(n, 0.0);
    alias_.assign(n, 0);

    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = weights[i] * static_cast<double>(n) / total;

    std::deque<std::uint32_t> small, large;
    for (std::size_t i = 0; i < n; ++i)
        (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));

    while (!small.empty() && !large.empty()) {
        const std::uint32_t s = small.front();
        const std::uint32_t l = large.front();
        small.pop_front();
        large.pop_front();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] -= 1.0 - scaled[s];
        (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    for (std::uint32_t i : large) prob_[i] = 1.0;
    for (std::uint32_t i : small) prob_[i] = 1.0; // round-off leftovers
}

std::size_t AliasTable::sample(RngStream& rng) const {
    const std::size_t column = static_cast<std::size_t>(rng.bounded(prob_.size()));
    return rng.uniform() < prob_[column] ? column : alias_[column];
}

} // namespace synthpop
