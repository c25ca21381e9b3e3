#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matchkit/instance.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

// A set-disjointness instance over ordered pairs (i, j), i != j, i, j in [1, m],
// with the promise |A ∩ B| <= 1.
struct DisjointnessInstance {
    int m = 0;    // agents per encoding group; market size is m + 2*eta + 1
    int eta = 0;  // padding per side of the predicted match
    std::vector<std::pair<int, int>> a_pairs;  // 1-based
    std::vector<std::pair<int, int>> b_pairs;

    // Validates ranges, i != j, and the promise; throws std::invalid_argument.
    void validate() const;
    // The unique common pair, if any.
    std::optional<std::pair<int, int>> intersection() const;
};

enum class GadgetGroup { encode, padding_upper, padding_lower, backup };

// Market encoding a disjointness instance: the predicted matching is stable
// iff A and B are disjoint, and any stable matching is within max error eta
// of the prediction iff they are disjoint.
struct GadgetInstance {
    Instance inst;
    Matching predicted;  // pairs i-th encode agents, i-th padding agents, backups
    int m = 0;
    int eta = 0;
    std::vector<GadgetGroup> group;  // by agent index, same layout on both sides
};

// Agent layout per side: [0, m) encode, [m, m+eta) upper padding,
// [m+eta, m+2*eta) lower padding, m+2*eta backup. Free-order list segments are
// ascending by index, or shuffled when a seed is given.
GadgetInstance build_gadget(const DisjointnessInstance& d,
                            std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// The stable matching reachable from the prediction by rematching six agents;
// requires A ∩ B nonempty.
Matching repair_matching(const GadgetInstance& g);

// max over agents of |rank of predicted match - rank of mu's match| on the
// agent's full list. Requires mu perfect.
int max_error(const GadgetInstance& g, const Matching& mu);

// Sum of those rank shifts over all 2n agents.
long long total_error(const GadgetInstance& g, const Matching& mu);

// Total error divided by the market size n.
double average_error(const GadgetInstance& g, const Matching& mu);

}  // namespace matchkit
