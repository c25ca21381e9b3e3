#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matchkit {

enum class Side { residents, hospitals };

Side opposite(Side side);
const char* to_string(Side side);

// Rank of an absent counterpart. Ranks are 1-based; rank 1 = most preferred.
inline constexpr int kNoRank = 0;

// Per-agent counterpart -> rank lookup, built eagerly (O(n^2) space).
class RankTable {
public:
    RankTable() = default;
    static RankTable from_prefs(const std::vector<std::vector<int>>& prefs, int n);

    int rank(int agent, int counterpart) const { return table_[agent][counterpart]; }
    bool lists(int agent, int counterpart) const { return rank(agent, counterpart) != kNoRank; }

    // True iff `agent` ranks `a` and either does not rank `b` or ranks `a` higher.
    bool prefers(int agent, int a, int b) const;

private:
    std::vector<std::vector<int>> table_;
};

// A two-sided market with strict (possibly truncated) preference lists.
// Indices are 0-based; a full instance has every list a permutation of [0, n).
class Instance {
public:
    Instance(std::vector<std::vector<int>> resident_prefs,
             std::vector<std::vector<int>> hospital_prefs);

    int size() const { return n_; }

    const std::vector<std::vector<int>>& prefs(Side side) const;
    const std::vector<int>& pref_list(Side side, int agent) const {
        return prefs(side)[static_cast<size_t>(agent)];
    }

    const RankTable& ranks(Side side) const;
    int rank(Side side, int agent, int counterpart) const {
        return ranks(side).rank(agent, counterpart);
    }
    bool lists(Side side, int agent, int counterpart) const {
        return ranks(side).lists(agent, counterpart);
    }

    bool is_full() const;

    // r appears on h's list iff h appears on r's list.
    bool mutually_consistent() const;

    // Total length of one side's lists.
    long long total_list_length(Side side) const;

    bool operator==(const Instance& other) const {
        return resident_prefs_ == other.resident_prefs_ && hospital_prefs_ == other.hospital_prefs_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> resident_prefs_;
    std::vector<std::vector<int>> hospital_prefs_;
    RankTable resident_ranks_;
    RankTable hospital_ranks_;
};

// Validates and constructs. Throws std::invalid_argument on duplicate indices,
// out-of-range indices, or mismatched side sizes.
Instance build_instance(std::vector<std::vector<int>> resident_prefs,
                        std::vector<std::vector<int>> hospital_prefs);

}  // namespace matchkit
