#include "votelab/lobby.hpp"

#include <algorithm>
#include <stdexcept>

namespace votelab::lobby {

void VoteMatrix::validate() const {
    if (voters < 1 || referenda < 1)
        throw std::invalid_argument("instance needs at least one voter and one referendum");
    if (static_cast<int>(entries.size()) != voters)
        throw std::invalid_argument("row count does not match voter count");
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != referenda)
            throw std::invalid_argument("row length does not match referendum count");
        for (uint8_t v : row)
            if (v > 1) throw std::invalid_argument("matrix entry outside {0,1}");
    }
    if (static_cast<int>(prices.size()) != voters)
        throw std::invalid_argument("price list length does not match voter count");
    for (const auto& p : prices)
        if (p < 0) throw std::invalid_argument("negative price");
    if (static_cast<int>(target.size()) != referenda)
        throw std::invalid_argument("target length does not match referendum count");
    for (uint8_t v : target)
        if (v > 1) throw std::invalid_argument("target entry outside {0,1}");
}

NormalizedInstance normalize(const VoteMatrix& instance) {
    instance.validate();
    NormalizedInstance norm{instance, std::vector<uint8_t>(instance.referenda, 0)};
    for (int j = 0; j < instance.referenda; ++j) {
        if (instance.target[j] == 0) {
            norm.flip_mask[j] = 1;
            for (int i = 0; i < instance.voters; ++i)
                norm.base.entries[i][j] ^= 1;
            norm.base.target[j] = 1;
        }
    }
    return norm;
}

VoteMatrix denormalize(const NormalizedInstance& norm) {
    VoteMatrix out = norm.base;
    for (int j = 0; j < out.referenda; ++j) {
        if (norm.flip_mask[j]) {
            for (int i = 0; i < out.voters; ++i) out.entries[i][j] ^= 1;
            out.target[j] = 0;
        }
    }
    return out;
}

std::vector<int> denormalize_solution(const NormalizedInstance&, std::vector<int> rows) {
    return rows;
}

namespace {

int majority_threshold(int m) { return m / 2 + 1; }

int deficit_of_column(const VoteMatrix& v, int column) {
    int ones = 0;
    for (int i = 0; i < v.voters; ++i) ones += v.entries[i][column];
    return std::max(0, majority_threshold(v.voters) - ones);
}

}  // namespace

int column_deficit(const NormalizedInstance& norm, int column) {
    if (column < 0 || column >= norm.base.referenda)
        throw std::out_of_range("column index out of range");
    return deficit_of_column(norm.base, column);
}

DeficitVector deficit_sum(const NormalizedInstance& norm) {
    DeficitVector d;
    d.per_column.resize(norm.base.referenda);
    for (int j = 0; j < norm.base.referenda; ++j) {
        d.per_column[j] = deficit_of_column(norm.base, j);
        d.total += d.per_column[j];
    }
    return d;
}

std::optional<Rat> cost_effectiveness(const NormalizedInstance& norm, int row,
                                      const std::vector<int>& active_columns) {
    if (row < 0 || row >= norm.base.voters)
        throw std::out_of_range("row index out of range");
    int zeros = 0;
    for (int j : active_columns)
        if (norm.base.entries[row][j] == 0) ++zeros;
    if (zeros == 0) return std::nullopt;
    Rat ce = norm.base.prices[row] / zeros;
    ce.canonicalize();
    return ce;
}

GreedyTrace greedy_lobby(const NormalizedInstance& norm) {
    for (uint8_t t : norm.base.target)
        if (t != 1) throw std::invalid_argument("greedy_lobby expects a normalized instance");

    VoteMatrix work = norm.base;
    const int m = work.voters;
    const int n = work.referenda;

    std::vector<int> deficits(n);
    long remaining = 0;
    for (int j = 0; j < n; ++j) {
        deficits[j] = deficit_of_column(work, j);
        remaining += deficits[j];
    }

    GreedyTrace trace;
    int flip_index = 1;
    int iteration = 1;
    while (remaining > 0) {
        // Most cost-effective row; ties go to the lowest index. A row with
        // no zeros in the active columns has cost +infinity and never wins.
        int best_row = -1;
        int best_zeros = 0;
        Rat best_ce;
        for (int i = 0; i < m; ++i) {
            int zeros = 0;
            for (int j = 0; j < n; ++j)
                if (deficits[j] > 0 && work.entries[i][j] == 0) ++zeros;
            if (zeros == 0) continue;
            Rat ce = work.prices[i] / zeros;
            ce.canonicalize();
            if (best_row < 0 || ce < best_ce) {
                best_row = i;
                best_zeros = zeros;
                best_ce = ce;
            }
        }
        // While any deficit is positive its column holds a zero, so some
        // row is finite; best_ce is that row's price split over its flips.
        for (int j = 0; j < n; ++j) {
            if (deficits[j] > 0 && work.entries[best_row][j] == 0) {
                work.entries[best_row][j] = 1;
                --deficits[j];
                --remaining;
                trace.flips.push_back({flip_index++, best_row, j, best_ce, iteration});
            }
        }
        trace.iteration_sizes.push_back(best_zeros);
        trace.selected_rows.push_back(best_row);
        trace.total_price += work.prices[best_row];
        ++iteration;
    }
    trace.total_price.canonicalize();
    return trace;
}

VoteMatrix apply_trace(const NormalizedInstance& norm, const GreedyTrace& trace) {
    VoteMatrix out = norm.base;
    for (const auto& flip : trace.flips) out.entries[flip.row][flip.column] = 1;
    return out;
}

bool satisfies_target(const VoteMatrix& original, const std::vector<int>& rows) {
    original.validate();
    VoteMatrix work = original;
    for (int i : rows) {
        if (i < 0 || i >= work.voters) throw std::out_of_range("row index out of range");
        work.entries[i] = std::vector<uint8_t>(work.target.begin(), work.target.end());
    }
    const int need = majority_threshold(work.voters);
    for (int j = 0; j < work.referenda; ++j) {
        int ones = 0;
        for (int i = 0; i < work.voters; ++i) ones += work.entries[i][j];
        const int zeros = work.voters - ones;
        if (work.target[j] == 1 ? ones < need : zeros < need) return false;
    }
    return true;
}

}  // namespace votelab::lobby
