#include "matchkit/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace matchkit {

namespace {

// Backtracking enumerator. Residents are assigned in index order; a pair is
// tested for blocking exactly when both endpoints' outcomes are final along
// the current branch (a hospital's match never changes once assigned).
class Enumerator {
public:
    Enumerator(const Instance& inst, bool allow_unmatched)
        : inst_(inst),
          n_(inst.size()),
          allow_unmatched_(allow_unmatched),
          hospital_holder_(static_cast<size_t>(n_), kUnmatched),
          resident_match_(static_cast<size_t>(n_), kUnmatched) {}

    std::vector<Matching> run() {
        recurse(0);
        return std::move(found_);
    }

private:
    bool creates_block_with_matched(int r) const {
        // (r, h') for already-matched hospitals h' is decidable now.
        const int match = resident_match_[static_cast<size_t>(r)];
        const auto& rranks = inst_.ranks(Side::residents);
        const auto& hranks = inst_.ranks(Side::hospitals);
        for (int h : inst_.pref_list(Side::residents, r)) {
            if (h == match) break;  // no better hospital left to scan
            const int holder = hospital_holder_[static_cast<size_t>(h)];
            if (holder == kUnmatched) continue;  // undecidable until the leaf
            if (match == kUnmatched || rranks.prefers(r, h, match)) {
                if (hranks.prefers(h, r, holder)) return true;
            }
        }
        return false;
    }

    bool newly_matched_hospital_blocks(int h, int up_to_resident) const {
        // (r', h) for residents decided so far.
        const int holder = hospital_holder_[static_cast<size_t>(h)];
        const auto& rranks = inst_.ranks(Side::residents);
        const auto& hranks = inst_.ranks(Side::hospitals);
        for (int r = 0; r <= up_to_resident; ++r) {
            if (r == holder) continue;
            if (!hranks.prefers(h, r, holder)) continue;
            const int match = resident_match_[static_cast<size_t>(r)];
            if (match == kUnmatched ? rranks.lists(r, h) : rranks.prefers(r, h, match)) {
                return true;
            }
        }
        return false;
    }

    bool leaf_is_stable() const {
        // Only pairs with a hospital that ended unmatched remain unchecked.
        const auto& rranks = inst_.ranks(Side::residents);
        const auto& hranks = inst_.ranks(Side::hospitals);
        for (int h = 0; h < n_; ++h) {
            if (hospital_holder_[static_cast<size_t>(h)] != kUnmatched) continue;
            for (int r : inst_.pref_list(Side::hospitals, h)) {
                const int match = resident_match_[static_cast<size_t>(r)];
                if (match == kUnmatched ? rranks.lists(r, h) : rranks.prefers(r, h, match)) {
                    return false;
                }
            }
        }
        return true;
    }

    void recurse(int r) {
        if (r == n_) {
            if (leaf_is_stable()) {
                found_.push_back(Matching::from_resident_assignment(resident_match_));
            }
            return;
        }
        for (int h : inst_.pref_list(Side::residents, r)) {
            if (hospital_holder_[static_cast<size_t>(h)] != kUnmatched) continue;
            if (!inst_.lists(Side::hospitals, h, r)) continue;
            resident_match_[static_cast<size_t>(r)] = h;
            hospital_holder_[static_cast<size_t>(h)] = r;
            if (!creates_block_with_matched(r) && !newly_matched_hospital_blocks(h, r)) {
                recurse(r + 1);
            }
            resident_match_[static_cast<size_t>(r)] = kUnmatched;
            hospital_holder_[static_cast<size_t>(h)] = kUnmatched;
        }
        if (allow_unmatched_) {
            resident_match_[static_cast<size_t>(r)] = kUnmatched;
            if (!creates_block_with_matched(r)) recurse(r + 1);
        }
    }

    const Instance& inst_;
    int n_;
    bool allow_unmatched_;
    std::vector<int> hospital_holder_;
    std::vector<int> resident_match_;
    std::vector<Matching> found_;
};

// Rank of an agent's match with unmatched treated as worse than any rank.
int match_rank(const Instance& inst, Side side, int agent, int counterpart) {
    if (counterpart == kUnmatched) return std::numeric_limits<int>::max();
    return inst.rank(side, agent, counterpart);
}

int find_optimal(const Instance& inst, const std::vector<Matching>& set, Side side) {
    const int n = inst.size();
    for (size_t cand = 0; cand < set.size(); ++cand) {
        bool dominates = true;
        for (size_t other = 0; other < set.size() && dominates; ++other) {
            for (int a = 0; a < n && dominates; ++a) {
                const int mc = side == Side::residents ? set[cand].hospital_of(a)
                                                       : set[cand].resident_of(a);
                const int mo = side == Side::residents ? set[other].hospital_of(a)
                                                       : set[other].resident_of(a);
                if (match_rank(inst, side, a, mc) > match_rank(inst, side, a, mo)) {
                    dominates = false;
                }
            }
        }
        if (dominates) return static_cast<int>(cand);
    }
    throw std::logic_error("stable set has no side-optimal element");
}

}  // namespace

bool StableSet::contains(const Matching& mu) const {
    return std::find(matchings.begin(), matchings.end(), mu) != matchings.end();
}

StableSet enumerate_stable(const Instance& inst) {
    if (inst.size() > kOracleMaxN) {
        throw std::invalid_argument("oracle enumeration limited to n <= " +
                                    std::to_string(kOracleMaxN));
    }
    const bool full = inst.is_full();
    StableSet out;
    out.matchings = Enumerator(inst, /*allow_unmatched=*/!full).run();
    if (!out.matchings.empty()) {
        out.resident_optimal = find_optimal(inst, out.matchings, Side::residents);
        out.hospital_optimal = find_optimal(inst, out.matchings, Side::hospitals);
    }
    return out;
}

long long prediction_distance(const Matching& mu, const PrunedInstance& pruned,
                              const std::vector<int>& rho) {
    long long total = 0;
    for (int h = 0; h < pruned.pruned.size(); ++h) {
        const int r = mu.resident_of(h);
        if (r == kUnmatched) continue;
        total += rho[static_cast<size_t>(h)] - pruned.pruned.rank(Side::hospitals, h, r);
    }
    return total;
}

const Matching& closest_to_prediction(const StableSet& stable, const PrunedInstance& pruned,
                                      const std::vector<int>& rho) {
    if (stable.empty()) throw std::invalid_argument("stable set is empty");
    const Matching* best = nullptr;
    long long best_distance = 0;
    for (const Matching& mu : stable.matchings) {
        const long long d = prediction_distance(mu, pruned, rho);
        if (best == nullptr || d < best_distance ||
            (d == best_distance && mu.hospital_to_resident() < best->hospital_to_resident())) {
            best = &mu;
            best_distance = d;
        }
    }
    return *best;
}

}  // namespace matchkit
