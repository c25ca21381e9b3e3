#pragma once

#include <utility>
#include <vector>

#include "matchkit/da.hpp"
#include "matchkit/instance.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

// Per-hospital retained rank interval [lo, hi], 1-based on the hospital's
// full list. WDA prunes to the interval; PDA keeps the prefix [1, hi].
class PredictionWindow {
public:
    // Window [rho - eta, rho + eta] clamped to [1, n].
    static PredictionWindow from_rank_and_error(const std::vector<int>& rho,
                                                const std::vector<int>& eta, int n);
    // Learned bounds, already 1-based; clamped to [1, n].
    static PredictionWindow from_bounds(std::vector<int> lo, std::vector<int> hi, int n);

    int size() const { return static_cast<int>(lo_.size()); }
    int lo(int h) const { return lo_[static_cast<size_t>(h)]; }
    int hi(int h) const { return hi_[static_cast<size_t>(h)]; }
    const std::vector<int>& lower_bounds() const { return lo_; }
    const std::vector<int>& upper_bounds() const { return hi_; }

    // PDA uses only the upper predicted ranks.
    std::vector<int> prefix_cutoffs() const { return hi_; }

private:
    std::vector<int> lo_;
    std::vector<int> hi_;
};

// Consistently truncated instance: hospital lists are contiguous sublists of
// the originals, resident lists keep exactly the hospitals whose kept sublist
// contains them, in original order.
struct PrunedInstance {
    const Instance* base = nullptr;               // original instance, not owned
    Instance pruned;                              // truncated lists, mutually consistent
    std::vector<std::pair<int, int>> kept_interval;  // per hospital, 1-based [lo, hi]

    long long hospital_list_total() const { return pruned.total_list_length(Side::hospitals); }
};

PrunedInstance prune_window(const Instance& inst, const PredictionWindow& pred);
PrunedInstance prune_prefix(const Instance& inst, const std::vector<int>& rho);

struct WdaResult {
    Matching matching;
    RunStats stats;
    StabilityVerdict verdict;  // against the original instance
    bool perfect = false;
    long long instance_size = 0;  // total truncated hospital list length
};

// DA on the window-pruned instance with the given proposing side. Unstable or
// imperfect outputs are reported, never repaired.
WdaResult run_wda(const Instance& inst, const PredictionWindow& pred, Side proposer_side);

struct PdaResult {
    Matching matching;
    RunStats stats;
    std::vector<int> unmatched_hospitals;
    long long instance_size = 0;
};

// Resident-proposing DA on the prefix-pruned instance. Any unmatched hospital
// certifies that its hospital-optimal partner lies beyond its prefix.
PdaResult run_pda_once(const Instance& inst, const std::vector<int>& rho);

struct PdaAdaptiveResult {
    Matching matching;
    RunStats stats;   // proposals and iterations summed across rounds
    int rounds = 0;
    long long instance_size = 0;  // initial list total plus each post-extension recount
    std::vector<int> final_cutoffs;
};

// Repeats run_pda_once, after each imperfect round extending only the
// unmatched hospitals' cutoffs by the current extension (clamped to n) and
// growing the extension, until the matching is perfect.
PdaAdaptiveResult run_pda_adaptive(const Instance& inst, std::vector<int> rho,
                                   int initial_extension, int growth = 2);

}  // namespace matchkit
