#include "matchkit/truncation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace matchkit {

namespace {

int clamp_rank(int value, int n) { return std::clamp(value, 1, n); }

void check_size(size_t got, int n, const char* what) {
    if (static_cast<int>(got) != n) {
        throw std::invalid_argument(std::string(what) + " has size " + std::to_string(got) +
                                    ", expected " + std::to_string(n));
    }
}

// Builds the pruned instance from per-hospital kept intervals.
PrunedInstance prune_intervals(const Instance& inst, std::vector<std::pair<int, int>> intervals) {
    const int n = inst.size();
    std::vector<std::vector<int>> hospital_lists(static_cast<size_t>(n));
    std::vector<std::vector<char>> kept(static_cast<size_t>(n),
                                        std::vector<char>(static_cast<size_t>(n), 0));

    for (int h = 0; h < n; ++h) {
        const auto& full = inst.pref_list(Side::hospitals, h);
        const int len = static_cast<int>(full.size());
        auto& [lo, hi] = intervals[static_cast<size_t>(h)];
        lo = std::clamp(lo, 1, len);
        hi = std::clamp(hi, 1, len);
        auto& list = hospital_lists[static_cast<size_t>(h)];
        for (int pos = lo; pos <= hi; ++pos) {
            const int r = full[static_cast<size_t>(pos - 1)];
            list.push_back(r);
            kept[static_cast<size_t>(h)][static_cast<size_t>(r)] = 1;
        }
    }

    std::vector<std::vector<int>> resident_lists(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int h : inst.pref_list(Side::residents, r)) {
            if (kept[static_cast<size_t>(h)][static_cast<size_t>(r)]) {
                resident_lists[static_cast<size_t>(r)].push_back(h);
            }
        }
    }

    PrunedInstance out{&inst, Instance(std::move(resident_lists), std::move(hospital_lists)),
                       std::move(intervals)};
    if (!out.pruned.mutually_consistent()) {
        throw std::logic_error("pruned instance lost mutual consistency");
    }
    return out;
}

}  // namespace

PredictionWindow PredictionWindow::from_rank_and_error(const std::vector<int>& rho,
                                                       const std::vector<int>& eta, int n) {
    check_size(rho.size(), n, "rho");
    check_size(eta.size(), n, "eta");
    std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    for (int h = 0; h < n; ++h) {
        const int r = rho[static_cast<size_t>(h)];
        const int e = eta[static_cast<size_t>(h)];
        if (r < 1 || r > n) throw std::invalid_argument("rho out of [1, n]");
        if (e < 0) throw std::invalid_argument("eta must be non-negative");
        lo[static_cast<size_t>(h)] = clamp_rank(r - e, n);
        hi[static_cast<size_t>(h)] = clamp_rank(r + e, n);
    }
    return from_bounds(std::move(lo), std::move(hi), n);
}

PredictionWindow PredictionWindow::from_bounds(std::vector<int> lo, std::vector<int> hi, int n) {
    check_size(lo.size(), n, "lo");
    check_size(hi.size(), n, "hi");
    PredictionWindow w;
    for (int h = 0; h < n; ++h) {
        auto& l = lo[static_cast<size_t>(h)];
        auto& u = hi[static_cast<size_t>(h)];
        l = clamp_rank(l, n);
        u = clamp_rank(u, n);
        if (l > u) {
            throw std::invalid_argument("empty window for hospital " + std::to_string(h));
        }
    }
    w.lo_ = std::move(lo);
    w.hi_ = std::move(hi);
    return w;
}

PrunedInstance prune_window(const Instance& inst, const PredictionWindow& pred) {
    check_size(pred.size(), inst.size(), "prediction window");
    std::vector<std::pair<int, int>> intervals(static_cast<size_t>(inst.size()));
    for (int h = 0; h < inst.size(); ++h) {
        intervals[static_cast<size_t>(h)] = {pred.lo(h), pred.hi(h)};
    }
    return prune_intervals(inst, std::move(intervals));
}

PrunedInstance prune_prefix(const Instance& inst, const std::vector<int>& rho) {
    check_size(rho.size(), inst.size(), "rho");
    std::vector<std::pair<int, int>> intervals(static_cast<size_t>(inst.size()));
    for (int h = 0; h < inst.size(); ++h) {
        const int cutoff = rho[static_cast<size_t>(h)];
        if (cutoff < 1 || cutoff > inst.size()) {
            throw std::invalid_argument("prefix cutoff out of [1, n] for hospital " +
                                        std::to_string(h));
        }
        intervals[static_cast<size_t>(h)] = {1, cutoff};
    }
    return prune_intervals(inst, std::move(intervals));
}

WdaResult run_wda(const Instance& inst, const PredictionWindow& pred, Side proposer_side) {
    const PrunedInstance pi = prune_window(inst, pred);
    auto [mu, stats] = run_da(pi.pruned, proposer_side);
    WdaResult out{std::move(mu), stats, {}, false, pi.hospital_list_total()};
    out.verdict = verify_stability(inst, out.matching);
    out.perfect = out.matching.perfect();
    return out;
}

PdaResult run_pda_once(const Instance& inst, const std::vector<int>& rho) {
    const PrunedInstance pi = prune_prefix(inst, rho);
    auto [mu, stats] = run_da(pi.pruned, Side::residents);
    PdaResult out{std::move(mu), stats, {}, pi.hospital_list_total()};
    for (int h = 0; h < inst.size(); ++h) {
        if (!out.matching.hospital_matched(h)) out.unmatched_hospitals.push_back(h);
    }
    return out;
}

PdaAdaptiveResult run_pda_adaptive(const Instance& inst, std::vector<int> rho,
                                   int initial_extension, int growth) {
    if (initial_extension < 1) throw std::invalid_argument("initial_extension must be >= 1");
    if (growth < 1) throw std::invalid_argument("growth must be >= 1");

    const int n = inst.size();
    PdaAdaptiveResult out{Matching(n), {}, 0, 0, {}};
    out.stats.proposer_side = Side::residents;

    long long extension = initial_extension;
    while (true) {
        PdaResult round = run_pda_once(inst, rho);
        ++out.rounds;
        out.stats.proposals += round.stats.proposals;
        out.stats.iterations += round.stats.iterations;
        out.instance_size += round.instance_size;
        if (round.unmatched_hospitals.empty()) {
            out.matching = std::move(round.matching);
            out.stats.matched_count = out.matching.matched_count();
            out.final_cutoffs = std::move(rho);
            return out;
        }
        // Every unmatched hospital has cutoff < n (it is under-predicted), so
        // each imperfect round strictly extends someone; cutoffs reach n in at
        // most n rounds, where a perfect stable matching exists.
        for (int h : round.unmatched_hospitals) {
            auto& cutoff = rho[static_cast<size_t>(h)];
            cutoff = static_cast<int>(std::min<long long>(n, cutoff + extension));
        }
        extension = std::min<long long>(static_cast<long long>(n), extension * growth);
    }
}

}  // namespace matchkit
