#include "matchkit/predictions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "matchkit/da.hpp"
#include "matchkit/parallel.hpp"

namespace matchkit {

TrainingLog train(const InstanceSampler& sampler, int k, Side proposer_side, std::uint64_t seed,
                  int threads) {
    if (k < 2) throw std::invalid_argument("training needs at least 2 instances");
    const Side receiver_side = opposite(proposer_side);

    std::vector<std::vector<int>> per_run(static_cast<size_t>(k));
    parallel_for_index(k, threads, [&](int i) {
        const Instance inst = sampler(seed ^ static_cast<std::uint64_t>(i));
        auto [mu, stats] = run_da(inst, proposer_side);
        std::vector<int> ranks(static_cast<size_t>(inst.size()));
        for (int a = 0; a < inst.size(); ++a) {
            const int match = receiver_side == Side::hospitals ? mu.resident_of(a) : mu.hospital_of(a);
            if (match == kUnmatched) {
                throw std::runtime_error("receiver unmatched during training run " + std::to_string(i));
            }
            ranks[static_cast<size_t>(a)] = inst.rank(receiver_side, a, match);
        }
        per_run[static_cast<size_t>(i)] = std::move(ranks);
    });

    TrainingLog log;
    log.receiver_side = receiver_side;
    const size_t n = per_run.front().size();
    log.ranks.assign(n, std::vector<int>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i) {
        if (per_run[static_cast<size_t>(i)].size() != n) {
            throw std::runtime_error("training instances disagree on market size");
        }
        for (size_t a = 0; a < n; ++a) {
            log.ranks[a][static_cast<size_t>(i)] = per_run[static_cast<size_t>(i)][a];
        }
    }
    return log;
}

PredictionWindow learn_windows(const TrainingLog& log, int n) {
    if (static_cast<int>(log.ranks.size()) != n) {
        throw std::invalid_argument("training log does not cover every agent");
    }
    std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        const auto& obs = log.ranks[static_cast<size_t>(a)];
        if (obs.empty()) throw std::invalid_argument("empty rank log for agent " + std::to_string(a));
        const auto [mn_it, mx_it] = std::minmax_element(obs.begin(), obs.end());
        double mean = 0.0;
        for (int v : obs) mean += v;
        mean /= static_cast<double>(obs.size());
        double ss = 0.0;
        for (int v : obs) ss += (v - mean) * (v - mean);
        const double sigma = obs.size() > 1 ? std::sqrt(ss / static_cast<double>(obs.size() - 1)) : 0.0;
        lo[static_cast<size_t>(a)] =
            std::clamp(static_cast<int>(std::floor(*mn_it - 3.0 * sigma)), 1, n);
        hi[static_cast<size_t>(a)] =
            std::clamp(static_cast<int>(std::ceil(*mx_it + 3.0 * sigma)), 1, n);
    }
    return PredictionWindow::from_bounds(std::move(lo), std::move(hi), n);
}

}  // namespace matchkit
