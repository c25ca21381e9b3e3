#pragma once

#include <utility>

#include "matchkit/instance.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

struct RunStats {
    long long proposals = 0;
    int matched_count = 0;
    Side proposer_side = Side::residents;
    long long iterations = 0;
};

// Order in which free proposers are scheduled. Any order yields the same
// matching; fifo is the default for reproducible iteration counts.
enum class ProposalOrder { fifo, lifo };

// Classic deferred acceptance on a full or pruned instance. One proposer acts
// per iteration (McVitie-Wilson); each distinct offer is counted once. Agents
// that exhaust their list stay unmatched. The result is stable in `inst`,
// proposer-optimal and receiver-pessimal among its stable matchings.
std::pair<Matching, RunStats> run_da(const Instance& inst, Side proposer_side,
                                     ProposalOrder order = ProposalOrder::fifo);

}  // namespace matchkit
