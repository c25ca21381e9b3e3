#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matchkit/instance.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/truncation.hpp"

namespace matchkit {

// Stateless 64-bit mix used to decorrelate derived seeds.
std::uint64_t splitmix64(std::uint64_t x);

struct MallowsParams {
    int n = 0;
    double phi = 1.0;  // dispersion in [0, 1]; 0 = reference order, 1 = uniform
    // Reference rankings; empty means identity.
    std::vector<int> resident_reference;
    std::vector<int> hospital_reference;
};

// One permutation of `reference` via repeated insertion: the element inserted
// at step k lands at position j with probability phi^(k-j) / sum_t phi^t.
std::vector<int> sample_mallows_permutation(const std::vector<int>& reference, double phi,
                                            std::mt19937_64& rng);

Instance sample_mallows(const MallowsParams& params, std::uint64_t seed);

struct TierParams {
    std::vector<double> fractions{0.1, 0.2, 0.4, 0.2, 0.1};
    std::vector<double> weights{50, 25, 10, 5, 1};
};

// floor(fraction * n) per tier, leftover agents to the largest-fraction tier.
std::vector<int> tier_sizes(int n, const std::vector<double>& fractions);

// Lists drawn by weighted sampling without replacement over tier weights;
// both sides share the tier structure (agent index determines tier).
Instance sample_tiered(int n, const TierParams& params, std::uint64_t seed);

struct RatingTable {
    // Joint probabilities over (resident-side rating, hospital-side rating),
    // ratings 1..10. Stored row-normalized with separate row weights.
    std::array<std::array<double, 10>, 10> rows{};  // rows[i] sums to 1
    std::array<double, 10> row_weight{};            // sums to 1
    double popularity_strength = 0.05;
    double jitter_scale = 0.01;

    static RatingTable from_joint(const std::array<std::array<double, 10>, 10>& joint,
                                  double popularity_strength = 0.05, double jitter_scale = 0.01);
    static RatingTable default_table();
    static RatingTable load(const std::string& path);
    void save(const std::string& path) const;
};

// Pairwise ratings sampled from the table; each agent ranks counterparts by
// descending rating with popularity-adjusted random tie-breaking, then each
// side is relabeled so lower index = more popular.
Instance sample_rating_market(int n, const RatingTable& table, std::uint64_t seed);

// Uniformly random full preference lists on both sides.
Instance sample_uniform(int n, std::uint64_t seed);

struct Figure1 {
    Instance instance;
    Matching stable;          // the unique stable matching
    std::vector<int> rho;     // predicted rank of each hospital's match
    std::vector<int> eta;     // all ones
    PredictionWindow window;  // rho +- eta clamped
};

// The fixed 4x4 market where hospital-proposing window truncation fails.
Figure1 figure1_instance();

}  // namespace matchkit
