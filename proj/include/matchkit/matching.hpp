#pragma once

#include <optional>
#include <vector>

#include "matchkit/instance.hpp"

namespace matchkit {

inline constexpr int kUnmatched = -1;

// Partial or perfect assignment between the two sides, kept mutually inverse.
class Matching {
public:
    explicit Matching(int n);

    // Builds from a resident -> hospital array (-1 for unmatched).
    // Throws std::invalid_argument if a hospital index repeats or is out of range.
    static Matching from_resident_assignment(std::vector<int> resident_to_hospital);

    int size() const { return static_cast<int>(resident_to_hospital_.size()); }

    int hospital_of(int r) const { return resident_to_hospital_[static_cast<size_t>(r)]; }
    int resident_of(int h) const { return hospital_to_resident_[static_cast<size_t>(h)]; }
    bool resident_matched(int r) const { return hospital_of(r) != kUnmatched; }
    bool hospital_matched(int h) const { return resident_of(h) != kUnmatched; }

    // Both agents must currently be free.
    void match(int r, int h);
    void unmatch_resident(int r);

    int matched_count() const;
    bool perfect() const { return matched_count() == size(); }

    const std::vector<int>& resident_to_hospital() const { return resident_to_hospital_; }
    const std::vector<int>& hospital_to_resident() const { return hospital_to_resident_; }

    bool operator==(const Matching& other) const = default;

private:
    std::vector<int> resident_to_hospital_;
    std::vector<int> hospital_to_resident_;
};

struct BlockingPair {
    int resident = kUnmatched;
    int hospital = kUnmatched;
    bool operator==(const BlockingPair&) const = default;
};

struct StabilityVerdict {
    bool stable = false;
    std::optional<BlockingPair> witness;
};

// (r, h) blocks iff r prefers h to its match (or is unmatched and lists h) and
// h prefers r to its match (or is unmatched and lists r). Preference is judged
// on inst's rank tables; a match absent from the agent's list counts as unmatched.
bool is_blocking_pair(const Instance& inst, const Matching& mu, int r, int h);

// Exhaustive O(n^2) pair scan; an unstable verdict carries the first witness
// in (resident, hospital) index order.
StabilityVerdict verify_stability(const Instance& inst, const Matching& mu);

}  // namespace matchkit
