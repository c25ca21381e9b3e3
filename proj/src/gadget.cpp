#include "matchkit/gadget.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace matchkit {

namespace {

void validate_pairs(const std::vector<std::pair<int, int>>& pairs, int m, const char* name) {
    for (const auto& [i, j] : pairs) {
        if (i < 1 || i > m || j < 1 || j > m) {
            throw std::invalid_argument(std::string(name) + " contains pair (" + std::to_string(i) +
                                        ", " + std::to_string(j) + ") outside [1, " +
                                        std::to_string(m) + "]^2");
        }
        if (i == j) {
            throw std::invalid_argument(std::string(name) + " contains a pair with i == j");
        }
    }
}

}  // namespace

void DisjointnessInstance::validate() const {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (eta < 0) throw std::invalid_argument("eta must be >= 0");
    validate_pairs(a_pairs, m, "A");
    validate_pairs(b_pairs, m, "B");
    const std::set<std::pair<int, int>> a(a_pairs.begin(), a_pairs.end());
    const std::set<std::pair<int, int>> b(b_pairs.begin(), b_pairs.end());
    std::vector<std::pair<int, int>> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.size() > 1) {
        throw std::invalid_argument("|A ∩ B| must be at most 1, got " +
                                    std::to_string(common.size()));
    }
}

std::optional<std::pair<int, int>> DisjointnessInstance::intersection() const {
    const std::set<std::pair<int, int>> a(a_pairs.begin(), a_pairs.end());
    for (const auto& p : b_pairs) {
        if (a.count(p)) return p;
    }
    return std::nullopt;
}

namespace {

// Agent layout per side.
struct Layout {
    int m, eta, n;
    int encode(int i) const { return i; }             // 0-based group index
    int padding_upper(int i) const { return m + i; }
    int padding_lower(int i) const { return m + eta + i; }
    int backup() const { return m + 2 * eta; }
};

void append_range(std::vector<int>& out, int first, int count) {
    for (int i = 0; i < count; ++i) out.push_back(first + i);
}

}  // namespace

GadgetInstance build_gadget(const DisjointnessInstance& d, std::optional<std::uint64_t> shuffle_seed) {
    d.validate();
    const Layout lay{d.m, d.eta, d.m + 2 * d.eta + 1};
    const int n = lay.n;

    // membership[i][j] for 0-based encode indices
    std::vector<std::vector<char>> in_a(static_cast<size_t>(d.m), std::vector<char>(static_cast<size_t>(d.m), 0));
    std::vector<std::vector<char>> in_b = in_a;
    for (const auto& [i, j] : d.a_pairs) in_a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = 1;
    for (const auto& [i, j] : d.b_pairs) in_b[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = 1;

    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);
    std::vector<std::vector<int>> segments;  // free-order segments of the list under construction

    auto flush = [&](std::vector<int>& list) {
        for (auto& seg : segments) {
            if (rng) std::shuffle(seg.begin(), seg.end(), *rng);
            list.insert(list.end(), seg.begin(), seg.end());
        }
        segments.clear();
    };

    std::vector<std::vector<int>> hospital_lists(static_cast<size_t>(n));
    std::vector<std::vector<int>> resident_lists(static_cast<size_t>(n));

    // Encode-group lists: [pairs-in-set | upper padding | index mate | backup |
    // lower padding | pairs-not-in-set].
    auto build_encode_list = [&](int i, const std::vector<std::vector<char>>& member) {
        std::vector<int> list;
        list.reserve(static_cast<size_t>(n));
        std::vector<int> in_set, out_set;
        for (int j = 0; j < d.m; ++j) {
            if (j == i) continue;
            (member[static_cast<size_t>(i)][static_cast<size_t>(j)] ? in_set : out_set)
                .push_back(lay.encode(j));
        }
        segments.push_back(std::move(in_set));
        std::vector<int> padding_upper;
        append_range(padding_upper, lay.padding_upper(0), d.eta);
        segments.push_back(std::move(padding_upper));
        flush(list);
        list.push_back(lay.encode(i));
        list.push_back(lay.backup());
        std::vector<int> padding_lower;
        append_range(padding_lower, lay.padding_lower(0), d.eta);
        segments.push_back(std::move(padding_lower));
        segments.push_back(std::move(out_set));
        flush(list);
        return list;
    };

    for (int i = 0; i < d.m; ++i) {
        hospital_lists[static_cast<size_t>(lay.encode(i))] = build_encode_list(i, in_a);
        resident_lists[static_cast<size_t>(lay.encode(i))] = build_encode_list(i, in_b);
    }

    // Padding lists: index mate first, everyone else after in free order.
    auto build_padding_list = [&](int self) {
        std::vector<int> list;
        list.reserve(static_cast<size_t>(n));
        list.push_back(self);
        std::vector<int> rest;
        for (int a = 0; a < n; ++a) {
            if (a != self) rest.push_back(a);
        }
        segments.push_back(std::move(rest));
        flush(list);
        return list;
    };

    for (int i = 0; i < d.eta; ++i) {
        hospital_lists[static_cast<size_t>(lay.padding_upper(i))] = build_padding_list(lay.padding_upper(i));
        resident_lists[static_cast<size_t>(lay.padding_upper(i))] = build_padding_list(lay.padding_upper(i));
        hospital_lists[static_cast<size_t>(lay.padding_lower(i))] = build_padding_list(lay.padding_lower(i));
        resident_lists[static_cast<size_t>(lay.padding_lower(i))] = build_padding_list(lay.padding_lower(i));
    }

    // Backup lists: [encode | upper padding | lower padding | backup mate].
    auto build_backup_list = [&] {
        std::vector<int> list;
        list.reserve(static_cast<size_t>(n));
        std::vector<int> encode_seg, upper_seg, lower_seg;
        append_range(encode_seg, 0, d.m);
        append_range(upper_seg, lay.padding_upper(0), d.eta);
        append_range(lower_seg, lay.padding_lower(0), d.eta);
        segments.push_back(std::move(encode_seg));
        segments.push_back(std::move(upper_seg));
        segments.push_back(std::move(lower_seg));
        flush(list);
        list.push_back(lay.backup());
        return list;
    };

    hospital_lists[static_cast<size_t>(lay.backup())] = build_backup_list();
    resident_lists[static_cast<size_t>(lay.backup())] = build_backup_list();

    Matching predicted(n);
    for (int a = 0; a < n; ++a) predicted.match(a, a);

    std::vector<GadgetGroup> group(static_cast<size_t>(n));
    for (int i = 0; i < d.m; ++i) group[static_cast<size_t>(lay.encode(i))] = GadgetGroup::encode;
    for (int i = 0; i < d.eta; ++i) {
        group[static_cast<size_t>(lay.padding_upper(i))] = GadgetGroup::padding_upper;
        group[static_cast<size_t>(lay.padding_lower(i))] = GadgetGroup::padding_lower;
    }
    group[static_cast<size_t>(lay.backup())] = GadgetGroup::backup;

    return {Instance(std::move(resident_lists), std::move(hospital_lists)), std::move(predicted),
            d.m, d.eta, std::move(group)};
}

Matching repair_matching(const GadgetInstance& g) {
    // The prediction's unique blocking pair is the (i, j) common to both sets:
    // padding and backup agents never block it, and an encode-group pair
    // blocks iff it lies in A on the hospital's list and B on the resident's.
    const StabilityVerdict verdict = verify_stability(g.inst, g.predicted);
    if (verdict.stable) {
        throw std::invalid_argument("repair_matching requires intersecting sets");
    }
    const int i_hat = verdict.witness->hospital;  // hospital index inside the encode group
    const int j_hat = verdict.witness->resident;
    const int backup = g.m + 2 * g.eta;

    std::vector<int> assignment = g.predicted.resident_to_hospital();
    assignment[static_cast<size_t>(j_hat)] = i_hat;   // j-th encode resident -> i-th encode hospital
    assignment[static_cast<size_t>(i_hat)] = backup;  // i-th encode resident -> backup hospital
    assignment[static_cast<size_t>(backup)] = j_hat;  // backup resident -> j-th encode hospital
    return Matching::from_resident_assignment(std::move(assignment));
}

namespace {

int agent_shift(const Instance& inst, Side side, int agent, const Matching& predicted,
                const Matching& mu) {
    const int pm = side == Side::hospitals ? predicted.resident_of(agent) : predicted.hospital_of(agent);
    const int mm = side == Side::hospitals ? mu.resident_of(agent) : mu.hospital_of(agent);
    return std::abs(inst.rank(side, agent, pm) - inst.rank(side, agent, mm));
}

void require_perfect(const Matching& mu) {
    if (!mu.perfect()) throw std::invalid_argument("error metrics require a perfect matching");
}

}  // namespace

int max_error(const GadgetInstance& g, const Matching& mu) {
    require_perfect(mu);
    int worst = 0;
    for (int a = 0; a < g.inst.size(); ++a) {
        worst = std::max(worst, agent_shift(g.inst, Side::residents, a, g.predicted, mu));
        worst = std::max(worst, agent_shift(g.inst, Side::hospitals, a, g.predicted, mu));
    }
    return worst;
}

long long total_error(const GadgetInstance& g, const Matching& mu) {
    require_perfect(mu);
    long long total = 0;
    for (int a = 0; a < g.inst.size(); ++a) {
        total += agent_shift(g.inst, Side::residents, a, g.predicted, mu);
        total += agent_shift(g.inst, Side::hospitals, a, g.predicted, mu);
    }
    return total;
}

double average_error(const GadgetInstance& g, const Matching& mu) {
    return static_cast<double>(total_error(g, mu)) / static_cast<double>(g.inst.size());
}

}  // namespace matchkit
