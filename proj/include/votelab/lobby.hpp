#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "votelab/rational.hpp"

namespace votelab::lobby {

// A weighted lobbying instance: m voters vote 0/1 on n referenda, each voter
// has a nonnegative rational price for rewriting their whole row, and the
// lobby wants every column to end with a strict majority matching its target.
struct VoteMatrix {
    int voters = 0;     // m
    int referenda = 0;  // n
    std::vector<std::vector<uint8_t>> entries;  // m rows by n columns, 0/1
    std::vector<Rat> prices;                    // length m, each >= 0
    std::vector<uint8_t> target;                // length n, 0/1

    // Throws std::invalid_argument on any shape or value violation.
    void validate() const;
};

// Instance rewritten so the target is implicitly all-ones. flip_mask records
// which columns were complemented; applying it again recovers the original.
struct NormalizedInstance {
    VoteMatrix base;
    std::vector<uint8_t> flip_mask;  // length n
};

struct DeficitVector {
    std::vector<int> per_column;  // d_j
    long total = 0;               // D_0
};

// One flipped entry e_k. cost is the selected row's price split evenly over
// the flips made in that row's iteration.
struct FlipRecord {
    int index = 0;   // k, 1-based, global flip order
    int row = 0;
    int column = 0;
    Rat cost;
    int iteration = 0;  // 1-based
};

struct GreedyTrace {
    std::vector<FlipRecord> flips;      // e_1 .. e_{D_0}
    std::vector<int> iteration_sizes;   // l_1 .. l_p
    std::vector<int> selected_rows;     // X, in purchase order
    Rat total_price = 0;
};

// Complements every column whose target entry is 0, making the target
// all-ones. Prices are untouched.
NormalizedInstance normalize(const VoteMatrix& instance);

// Inverse of normalize: re-applies the flip mask and restores the target.
VoteMatrix denormalize(const NormalizedInstance& norm);

// Row choices are target-invariant, so this is the identity; it exists so
// callers can report solutions against the original instance explicitly.
std::vector<int> denormalize_solution(const NormalizedInstance& norm,
                                      std::vector<int> rows);

// Flips still needed in column j for a strict majority of ones:
// max(0, floor(m/2)+1 - ones_j). Works for both parities of m; an exact
// half split is not a majority.
int column_deficit(const NormalizedInstance& norm, int column);

DeficitVector deficit_sum(const NormalizedInstance& norm);

// price(v_i) / number of zeros of row i within active_columns.
// nullopt encodes +infinity (no zeros to flip there).
std::optional<Rat> cost_effectiveness(const NormalizedInstance& norm, int row,
                                      const std::vector<int>& active_columns);

// The greedy loop: while some deficit is positive, buy the most
// cost-effective row (ties to the lowest row index), flip its zeros in the
// positive-deficit columns, and record one FlipRecord per flip. Performs
// exactly D_0 flips.
GreedyTrace greedy_lobby(const NormalizedInstance& norm);

// The base matrix after replaying a trace's flips.
VoteMatrix apply_trace(const NormalizedInstance& norm, const GreedyTrace& trace);

// Sets each bought row to the target pattern and checks every column for a
// strict majority of ones (target 1) or zeros (target 0).
bool satisfies_target(const VoteMatrix& original, const std::vector<int>& rows);

}  // namespace votelab::lobby
