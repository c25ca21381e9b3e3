#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "matchkit/instance.hpp"
#include "matchkit/truncation.hpp"

namespace matchkit {

using InstanceSampler = std::function<Instance(std::uint64_t seed)>;

// Observed match ranks per receiving agent across training runs, each on the
// agent's own full list.
struct TrainingLog {
    Side receiver_side = Side::hospitals;
    std::vector<std::vector<int>> ranks;  // [agent][run], 1-based

    int runs() const { return ranks.empty() ? 0 : static_cast<int>(ranks.front().size()); }
};

// Runs proposer-side DA on k fresh samples (seed ^ index per instance) and
// records every receiver's match rank. Throws if any receiver ends unmatched
// or k < 2.
TrainingLog train(const InstanceSampler& sampler, int k, Side proposer_side, std::uint64_t seed,
                  int threads = 0);

// Per agent: lo = clamp(floor(min - 3*sigma), 1, n), hi = clamp(ceil(max + 3*sigma), 1, n),
// sigma = sample standard deviation (k-1 denominator) of the agent's rank log.
PredictionWindow learn_windows(const TrainingLog& log, int n);

}  // namespace matchkit
