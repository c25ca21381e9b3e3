#include "matchkit/instance.hpp"

#include <stdexcept>
#include <utility>

namespace matchkit {

Side opposite(Side side) {
    return side == Side::residents ? Side::hospitals : Side::residents;
}

const char* to_string(Side side) {
    return side == Side::residents ? "residents" : "hospitals";
}

RankTable RankTable::from_prefs(const std::vector<std::vector<int>>& prefs, int n) {
    RankTable t;
    t.table_.assign(prefs.size(), std::vector<int>(static_cast<size_t>(n), kNoRank));
    for (size_t agent = 0; agent < prefs.size(); ++agent) {
        const auto& list = prefs[agent];
        for (size_t pos = 0; pos < list.size(); ++pos) {
            t.table_[agent][static_cast<size_t>(list[pos])] = static_cast<int>(pos) + 1;
        }
    }
    return t;
}

bool RankTable::prefers(int agent, int a, int b) const {
    const int ra = rank(agent, a);
    if (ra == kNoRank) return false;
    const int rb = rank(agent, b);
    return rb == kNoRank || ra < rb;
}

namespace {

void validate_side(const std::vector<std::vector<int>>& prefs, int n, const char* side_name) {
    std::vector<char> seen(static_cast<size_t>(n));
    for (size_t agent = 0; agent < prefs.size(); ++agent) {
        const auto& list = prefs[agent];
        if (static_cast<int>(list.size()) > n) {
            throw std::invalid_argument(std::string(side_name) + " list " + std::to_string(agent) +
                                        " longer than market size");
        }
        seen.assign(static_cast<size_t>(n), 0);
        for (int idx : list) {
            if (idx < 0 || idx >= n) {
                throw std::invalid_argument(std::string(side_name) + " list " + std::to_string(agent) +
                                            " contains out-of-range index " + std::to_string(idx));
            }
            if (seen[static_cast<size_t>(idx)]) {
                throw std::invalid_argument(std::string(side_name) + " list " + std::to_string(agent) +
                                            " contains duplicate index " + std::to_string(idx));
            }
            seen[static_cast<size_t>(idx)] = 1;
        }
    }
}

}  // namespace

Instance::Instance(std::vector<std::vector<int>> resident_prefs,
                   std::vector<std::vector<int>> hospital_prefs)
    : n_(static_cast<int>(resident_prefs.size())),
      resident_prefs_(std::move(resident_prefs)),
      hospital_prefs_(std::move(hospital_prefs)) {
    if (n_ == 0) throw std::invalid_argument("market size must be positive");
    if (hospital_prefs_.size() != resident_prefs_.size()) {
        throw std::invalid_argument("resident and hospital sides must have equal size");
    }
    validate_side(resident_prefs_, n_, "resident");
    validate_side(hospital_prefs_, n_, "hospital");
    resident_ranks_ = RankTable::from_prefs(resident_prefs_, n_);
    hospital_ranks_ = RankTable::from_prefs(hospital_prefs_, n_);
}

const std::vector<std::vector<int>>& Instance::prefs(Side side) const {
    return side == Side::residents ? resident_prefs_ : hospital_prefs_;
}

const RankTable& Instance::ranks(Side side) const {
    return side == Side::residents ? resident_ranks_ : hospital_ranks_;
}

bool Instance::is_full() const {
    for (const auto& list : resident_prefs_) {
        if (static_cast<int>(list.size()) != n_) return false;
    }
    for (const auto& list : hospital_prefs_) {
        if (static_cast<int>(list.size()) != n_) return false;
    }
    return true;
}

bool Instance::mutually_consistent() const {
    for (int r = 0; r < n_; ++r) {
        for (int h : resident_prefs_[static_cast<size_t>(r)]) {
            if (!hospital_ranks_.lists(h, r)) return false;
        }
    }
    for (int h = 0; h < n_; ++h) {
        for (int r : hospital_prefs_[static_cast<size_t>(h)]) {
            if (!resident_ranks_.lists(r, h)) return false;
        }
    }
    return true;
}

long long Instance::total_list_length(Side side) const {
    long long total = 0;
    for (const auto& list : prefs(side)) total += static_cast<long long>(list.size());
    return total;
}

Instance build_instance(std::vector<std::vector<int>> resident_prefs,
                        std::vector<std::vector<int>> hospital_prefs) {
    return Instance(std::move(resident_prefs), std::move(hospital_prefs));
}

}  // namespace matchkit
