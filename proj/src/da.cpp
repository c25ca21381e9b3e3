#include "matchkit/da.hpp"

#include <deque>

namespace matchkit {

std::pair<Matching, RunStats> run_da(const Instance& inst, Side proposer_side, ProposalOrder order) {
    const int n = inst.size();
    const Side receiver_side = opposite(proposer_side);
    const auto& proposer_prefs = inst.prefs(proposer_side);
    const auto& receiver_ranks = inst.ranks(receiver_side);

    // match_of_proposer[p] / match_of_receiver[q], -1 = free
    std::vector<int> match_of_proposer(static_cast<size_t>(n), kUnmatched);
    std::vector<int> match_of_receiver(static_cast<size_t>(n), kUnmatched);
    std::vector<size_t> next_choice(static_cast<size_t>(n), 0);  // rejection cursor

    std::deque<int> free_queue;
    for (int p = 0; p < n; ++p) free_queue.push_back(p);

    RunStats stats;
    stats.proposer_side = proposer_side;

    while (!free_queue.empty()) {
        int p;
        if (order == ProposalOrder::fifo) {
            p = free_queue.front();
            free_queue.pop_front();
        } else {
            p = free_queue.back();
            free_queue.pop_back();
        }
        ++stats.iterations;

        const auto& list = proposer_prefs[static_cast<size_t>(p)];
        if (next_choice[static_cast<size_t>(p)] >= list.size()) continue;  // exhausted

        const int q = list[next_choice[static_cast<size_t>(p)]++];
        ++stats.proposals;

        const int holder = match_of_receiver[static_cast<size_t>(q)];
        if (holder == kUnmatched) {
            match_of_receiver[static_cast<size_t>(q)] = p;
            match_of_proposer[static_cast<size_t>(p)] = q;
        } else if (receiver_ranks.prefers(q, p, holder)) {
            match_of_proposer[static_cast<size_t>(holder)] = kUnmatched;
            free_queue.push_back(holder);
            match_of_receiver[static_cast<size_t>(q)] = p;
            match_of_proposer[static_cast<size_t>(p)] = q;
        } else {
            free_queue.push_back(p);
        }
    }

    Matching mu(n);
    for (int p = 0; p < n; ++p) {
        const int q = match_of_proposer[static_cast<size_t>(p)];
        if (q == kUnmatched) continue;
        if (proposer_side == Side::residents) {
            mu.match(p, q);
        } else {
            mu.match(q, p);
        }
    }
    stats.matched_count = mu.matched_count();
    return {std::move(mu), stats};
}

}  // namespace matchkit
