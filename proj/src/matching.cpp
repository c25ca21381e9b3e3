#include "matchkit/matching.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace matchkit {

Matching::Matching(int n)
    : resident_to_hospital_(static_cast<size_t>(n), kUnmatched),
      hospital_to_resident_(static_cast<size_t>(n), kUnmatched) {}

Matching Matching::from_resident_assignment(std::vector<int> resident_to_hospital) {
    const int n = static_cast<int>(resident_to_hospital.size());
    Matching mu(n);
    for (int r = 0; r < n; ++r) {
        const int h = resident_to_hospital[static_cast<size_t>(r)];
        if (h == kUnmatched) continue;
        if (h < 0 || h >= n) {
            throw std::invalid_argument("matching entry " + std::to_string(r) +
                                        " has out-of-range hospital " + std::to_string(h));
        }
        if (mu.hospital_to_resident_[static_cast<size_t>(h)] != kUnmatched) {
            throw std::invalid_argument("hospital " + std::to_string(h) +
                                        " assigned to more than one resident");
        }
        mu.hospital_to_resident_[static_cast<size_t>(h)] = r;
    }
    mu.resident_to_hospital_ = std::move(resident_to_hospital);
    return mu;
}

void Matching::match(int r, int h) {
    if (resident_matched(r) || hospital_matched(h)) {
        throw std::logic_error("match() requires both agents free");
    }
    resident_to_hospital_[static_cast<size_t>(r)] = h;
    hospital_to_resident_[static_cast<size_t>(h)] = r;
}

void Matching::unmatch_resident(int r) {
    const int h = hospital_of(r);
    if (h == kUnmatched) return;
    resident_to_hospital_[static_cast<size_t>(r)] = kUnmatched;
    hospital_to_resident_[static_cast<size_t>(h)] = kUnmatched;
}

int Matching::matched_count() const {
    int count = 0;
    for (int h : resident_to_hospital_) count += (h != kUnmatched);
    return count;
}

bool is_blocking_pair(const Instance& inst, const Matching& mu, int r, int h) {
    if (mu.hospital_of(r) == h) return false;
    const auto& rranks = inst.ranks(Side::residents);
    const auto& hranks = inst.ranks(Side::hospitals);

    const int cur_h = mu.hospital_of(r);
    const bool r_wants = (cur_h == kUnmatched) ? rranks.lists(r, h) : rranks.prefers(r, h, cur_h);
    if (!r_wants) return false;

    const int cur_r = mu.resident_of(h);
    return (cur_r == kUnmatched) ? hranks.lists(h, r) : hranks.prefers(h, r, cur_r);
}

StabilityVerdict verify_stability(const Instance& inst, const Matching& mu) {
    const int n = inst.size();
    for (int r = 0; r < n; ++r) {
        for (int h = 0; h < n; ++h) {
            if (is_blocking_pair(inst, mu, r, h)) {
                return {false, BlockingPair{r, h}};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace matchkit
