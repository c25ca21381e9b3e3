#pragma once

#include <vector>

#include "matchkit/instance.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/truncation.hpp"

namespace matchkit {

// Maximum instance size accepted by the enumeration oracle.
inline constexpr int kOracleMaxN = 9;

struct StableSet {
    std::vector<Matching> matchings;
    int resident_optimal = -1;  // index into matchings
    int hospital_optimal = -1;

    bool empty() const { return matchings.empty(); }
    int count() const { return static_cast<int>(matchings.size()); }
    const Matching& resident_optimal_matching() const {
        return matchings[static_cast<size_t>(resident_optimal)];
    }
    const Matching& hospital_optimal_matching() const {
        return matchings[static_cast<size_t>(hospital_optimal)];
    }
    bool contains(const Matching& mu) const;
};

// Exhaustive assignment scan. Full instances enumerate perfect matchings only
// (an unmatched mutual pair would block); pruned instances also branch on
// leaving each resident unmatched. Throws std::invalid_argument for n > 9.
StableSet enumerate_stable(const Instance& inst);

// Sum over matched hospitals of rho_i - rank(pruned list of h_i, M(h_i)).
long long prediction_distance(const Matching& mu, const PrunedInstance& pruned,
                              const std::vector<int>& rho);

// The stable matching of the pruned instance closest to the predicted ranks;
// ties broken by lexicographic hospital assignment. Throws on an empty set.
const Matching& closest_to_prediction(const StableSet& stable, const PrunedInstance& pruned,
                                      const std::vector<int>& rho);

}  // namespace matchkit
