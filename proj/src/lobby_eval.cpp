#include "votelab/lobby_eval.hpp"

#include <algorithm>
#include <stdexcept>

#include "votelab/rng.hpp"

namespace votelab::lobby {

namespace {

// Sorted index sets compared lexicographically; a strict prefix is smaller.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool covers_deficits(const VoteMatrix& v, const std::vector<int>& deficits,
                     const std::vector<int>& rows) {
    std::vector<int> covered(v.referenda, 0);
    for (int i : rows)
        for (int j = 0; j < v.referenda; ++j)
            if (v.entries[i][j] == 0) ++covered[j];
    for (int j = 0; j < v.referenda; ++j)
        if (covered[j] < deficits[j]) return false;
    return true;
}

struct SubsetSearch {
    const VoteMatrix& matrix;
    const std::vector<int>& deficits;
    // zeros_below[r][j]: zeros in column j among rows >= r, for pruning
    // branches that can no longer cover some column.
    std::vector<std::vector<int>> zeros_below;
    std::vector<uint8_t> free_row_below;  // any zero-price row at index >= r

    std::vector<int> best_rows;
    Rat best_price;
    bool have_best = false;

    std::vector<int> chosen;
    std::vector<int> covered;

    explicit SubsetSearch(const VoteMatrix& v, const std::vector<int>& d)
        : matrix(v), deficits(d) {
        const int m = v.voters, n = v.referenda;
        zeros_below.assign(m + 1, std::vector<int>(n, 0));
        for (int r = m - 1; r >= 0; --r)
            for (int j = 0; j < n; ++j)
                zeros_below[r][j] = zeros_below[r + 1][j] + (v.entries[r][j] == 0 ? 1 : 0);
        free_row_below.assign(m + 1, 0);
        for (int r = m - 1; r >= 0; --r)
            free_row_below[r] = free_row_below[r + 1] || v.prices[r] == 0;
        covered.assign(n, 0);
    }

    void offer(const std::vector<int>& rows, const Rat& price) {
        if (!have_best || price < best_price ||
            (price == best_price && lex_less(rows, best_rows))) {
            best_rows = rows;
            best_price = price;
            have_best = true;
        }
    }

    bool feasible_now() const {
        for (int j = 0; j < matrix.referenda; ++j)
            if (covered[j] < deficits[j]) return false;
        return true;
    }

    void search(int row, const Rat& price) {
        if (have_best && price > best_price) return;
        for (int j = 0; j < matrix.referenda; ++j)
            if (covered[j] + zeros_below[row][j] < deficits[j]) return;
        if (feasible_now()) {
            offer(chosen, price);
            // Supersets cost at least as much; only zero-price rows could
            // tie, and those still matter for the lexicographic tie-break.
            if (!free_row_below[row]) return;
        }
        if (row == matrix.voters) return;

        chosen.push_back(row);
        for (int j = 0; j < matrix.referenda; ++j)
            if (matrix.entries[row][j] == 0) ++covered[j];
        search(row + 1, price + matrix.prices[row]);
        for (int j = 0; j < matrix.referenda; ++j)
            if (matrix.entries[row][j] == 0) --covered[j];
        chosen.pop_back();

        search(row + 1, price);
    }
};

}  // namespace

ExactSolution exact_opt(const NormalizedInstance& norm, const ExactOptions& opts) {
    const VoteMatrix& v = norm.base;
    if (v.voters > opts.max_voters)
        throw std::runtime_error("exact_opt: instance exceeds the brute-force cap of " +
                                 std::to_string(opts.max_voters) + " voters");

    const DeficitVector d = deficit_sum(norm);
    SubsetSearch search(v, d.per_column);

    // Buying every row is always feasible, so the search starts bounded.
    {
        std::vector<int> all(v.voters);
        Rat total = 0;
        for (int i = 0; i < v.voters; ++i) {
            all[i] = i;
            total += v.prices[i];
        }
        search.offer(all, total);
    }
    if (opts.hint_rows) {
        std::vector<int> hint = *opts.hint_rows;
        std::sort(hint.begin(), hint.end());
        if (covers_deficits(v, d.per_column, hint)) {
            Rat price = 0;
            for (int i : hint) price += v.prices[i];
            search.offer(hint, price);
        }
    }

    search.search(0, Rat(0));
    ExactSolution out{search.best_rows, search.best_price};
    out.opt_price.canonicalize();
    return out;
}

Rat harmonic(long k) {
    if (k < 1) throw std::invalid_argument("harmonic needs k >= 1");
    Rat sum = 0;
    for (long i = 1; i <= k; ++i) sum += make_rat(1, i);
    sum.canonicalize();
    return sum;
}

Rat refined_bound(const GreedyTrace& trace) {
    const long total = static_cast<long>(trace.flips.size());
    Rat sum = 0;
    long spent = 0;
    for (int size : trace.iteration_sizes) {
        sum += Rat(size) / Rat(total - spent);
        spent += size;
    }
    sum.canonicalize();
    return sum;
}

std::vector<long> per_entry_cost_violations(const GreedyTrace& trace, const Rat& opt) {
    const long total = static_cast<long>(trace.flips.size());
    std::vector<long> violations;
    for (const auto& flip : trace.flips) {
        Rat bound = opt / Rat(total - flip.index + 1);
        bound.canonicalize();
        if (flip.cost > bound) violations.push_back(flip.index);
    }
    return violations;
}

VoteMatrix tight_example(int n, const Rat& epsilon) {
    if (n < 2) throw std::invalid_argument("tight_example needs n >= 2");
    if (epsilon <= 0) throw std::invalid_argument("tight_example needs epsilon > 0");

    VoteMatrix v;
    v.voters = 2 * n + 1;
    v.referenda = n;
    v.entries.assign(v.voters, std::vector<uint8_t>(n, 0));
    v.prices.resize(v.voters);
    v.target.assign(n, 1);

    for (int i = 0; i < n; ++i) {  // v_1..v_n: single diagonal zero, price 1/i
        for (int j = 0; j < n; ++j) v.entries[i][j] = (i == j) ? 0 : 1;
        v.prices[i] = make_rat(1, i + 1);
    }
    v.prices[n] = 1 + epsilon;  // v_{n+1}: all zeros
    v.prices[n].canonicalize();
    for (int i = 0; i < n; ++i) {  // v_{n+2}..v_{2n+1}: single shifted one, price 2
        v.entries[n + 1 + i][i] = 1;
        v.prices[n + 1 + i] = 2;
    }
    return v;
}

VoteMatrix random_instance(const InstanceParams& params, uint64_t seed) {
    if (params.voters < 1 || params.referenda < 1)
        throw std::invalid_argument("random_instance needs m, n >= 1");
    if (params.price_model == PriceModel::uniform_rational && params.price_range < 1)
        throw std::invalid_argument("random_instance needs price_range >= 1");
    Xoshiro256 rng(seed);
    VoteMatrix v;
    v.voters = params.voters;
    v.referenda = params.referenda;
    v.entries.assign(v.voters, std::vector<uint8_t>(v.referenda, 0));
    for (auto& row : v.entries)
        for (auto& cell : row) cell = rng.coin() ? 1 : 0;
    v.prices.resize(v.voters);
    for (auto& price : v.prices) {
        if (params.price_model == PriceModel::unit) {
            price = 1;
        } else {
            long num = 1 + static_cast<long>(rng.uniform_below(params.price_range));
            long den = 1 + static_cast<long>(rng.uniform_below(params.price_range));
            price = make_rat(num, den);
        }
    }
    v.target.assign(v.referenda, 1);
    return v;
}

bool RatioReport::bounds_hold() const {
    if (initial_deficit == 0) return true;
    return ratio <= refined && refined <= harmonic_bound;
}

RatioReport make_ratio_report(const GreedyTrace& trace, const ExactSolution& exact) {
    RatioReport report;
    report.initial_deficit = static_cast<long>(trace.flips.size());
    report.greedy_price = trace.total_price;
    report.opt_price = exact.opt_price;
    if (report.initial_deficit == 0) {
        report.ratio = 1;
        report.harmonic_bound = 0;
        report.refined = 0;
    } else {
        // opt = 0 forces a zero-price greedy run as well (free rows stay
        // maximally cost-effective until the free cover is exhausted), so
        // the ratio is 1 by convention.
        if (exact.opt_price == 0) {
            report.ratio = 1;
        } else {
            report.ratio = trace.total_price / exact.opt_price;
            report.ratio.canonicalize();
        }
        report.harmonic_bound = harmonic(report.initial_deficit);
        report.refined = refined_bound(trace);
    }
    report.per_entry_ok = per_entry_cost_violations(trace, exact.opt_price).empty();
    return report;
}

std::vector<RatioReport> ratio_experiment(const ExperimentParams& params,
                                          uint64_t master_seed) {
    std::vector<RatioReport> reports;
    reports.reserve(params.trials);
    for (int trial = 0; trial < params.trials; ++trial) {
        VoteMatrix instance = random_instance(params.instance, derive_seed(master_seed, trial));
        NormalizedInstance norm = normalize(instance);
        GreedyTrace trace = greedy_lobby(norm);
        ExactOptions opts;
        opts.hint_rows = &trace.selected_rows;
        ExactSolution exact = exact_opt(norm, opts);
        reports.push_back(make_ratio_report(trace, exact));
    }
    return reports;
}

}  // namespace votelab::lobby
