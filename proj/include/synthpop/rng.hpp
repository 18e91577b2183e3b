#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "synthpop/error.hpp"

namespace synthpop {

// splitmix64 step; used only to mix seeds and stream tags.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Named sub-stream tags. Every stage draws from its own stream derived from
// (master seed, purpose, entity id), so inserting a stage or reordering
// per-entity work never shifts another stage's randomness.
enum class RngPurpose : std::uint64_t {
    integerize = 1,
    admin_units = 2,
    home_locations = 3,
    schools_placement = 4,
    workplaces_placement = 5,
    public_places_placement = 6,
    homebound = 7,
    job_labels = 8,
    school_choice = 9,
    workplace_choice = 10,
    public_place_choice = 11,
    flags = 12,
    comorbidities = 13,
    subsample = 14,
};

// Deterministic random stream. The engine is std::mt19937_64 (its output
// sequence is pinned by the standard); all variate generation is done here
// rather than with std:: distributions, whose streams are
// implementation-defined.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    static RngStream derived(std::uint64_t master, std::uint64_t tag_a, std::uint64_t tag_b = 0) {
        std::uint64_t s = master;
        splitmix64(s);
        s ^= 0xA5A5A5A5DEADBEEFULL + tag_a;
        splitmix64(s);
        s ^= tag_b;
        return RngStream(splitmix64(s));
    }

    static RngStream derived(std::uint64_t master, RngPurpose purpose, std::uint64_t entity = 0) {
        return derived(master, static_cast<std::uint64_t>(purpose), entity);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    bool bernoulli(double p) { return uniform() < p; }

    // Unbiased integer in [0, n) (Lemire's multiply-shift with rejection).
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) throw ValidationError("bounded draw with n = 0");
        unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(engine_()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Single weighted draw by cumulative scan. Weights must be >= 0 with a
    // positive sum.
    std::size_t weighted_index(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (!(total > 0.0)) throw InfeasibilityError("weighted draw over all-zero weights");
        double u = uniform() * total;
        double acc = 0.0;
        std::size_t last_positive = weights.size();
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] <= 0.0) continue;
            acc += weights[i];
            last_positive = i;
            if (u < acc) return i;
        }
        return last_positive; // round-off fell past the last positive weight
    }

private:
    std::mt19937_64 engine_;
};

// Walker/Vose alias table for repeated weighted draws with replacement.
class AliasTable {
public:
    explicit AliasTable(std::span<const double> weights);

    std::size_t size() const noexcept { return prob_.size(); }
    std::size_t sample(RngStream& rng) const;

private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

} // namespace synthpop
