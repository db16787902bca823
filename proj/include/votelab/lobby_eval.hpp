#pragma once

#include <cstdint>
#include <vector>

#include "votelab/lobby.hpp"
#include "votelab/rational.hpp"

namespace votelab::lobby {

// Minimum-price voter subset that clears every deficit, found by exhaustive
// subset search. The rows are sorted ascending; among equal-price optima the
// lexicographically smallest index set is returned.
struct ExactSolution {
    std::vector<int> rows;
    Rat opt_price = 0;
};

struct ExactOptions {
    int max_voters = 18;  // brute-force cap; raise knowingly
    // Optional feasible upper bound (e.g. the greedy's row set). Verified
    // before use; an infeasible hint is ignored.
    const std::vector<int>* hint_rows = nullptr;
};

ExactSolution exact_opt(const NormalizedInstance& norm, const ExactOptions& opts = {});

// H_k = 1 + 1/2 + ... + 1/k, exact.
Rat harmonic(long k);

// sum_j l_j / (D_0 - (l_1 + ... + l_{j-1})) over the trace's iterations;
// 0 for an empty trace. Never exceeds harmonic(D_0), with equality exactly
// when every l_j is 1.
Rat refined_bound(const GreedyTrace& trace);

// Indices k (1-based) where cost(e_k) > opt/(D_0 - k + 1). Always empty for
// a trace and optimum taken from the same instance; the caller is
// responsible for that pairing, it cannot be detected here.
std::vector<long> per_entry_cost_violations(const GreedyTrace& trace, const Rat& opt);

// The (2n+1) x n worst case for the greedy: voters v_1..v_n each have one
// zero on the diagonal at price 1/i, v_{n+1} is all zeros at price 1+epsilon,
// and v_{n+2}..v_{2n+1} carry a single shifted-diagonal one at price 2.
// Greedy pays H_n; buying v_{n+1} alone pays 1+epsilon. Requires n >= 2.
VoteMatrix tight_example(int n, const Rat& epsilon);

enum class PriceModel { unit, uniform_rational };

struct InstanceParams {
    int voters = 1;
    int referenda = 1;
    PriceModel price_model = PriceModel::unit;
    long price_range = 6;  // uniform_rational draws num, den from [1, range]
};

// Entries are i.i.d. fair coin flips, target all-ones, prices per model.
// Same seed, same instance.
VoteMatrix random_instance(const InstanceParams& params, uint64_t seed);

struct RatioReport {
    long initial_deficit = 0;  // D_0
    Rat greedy_price;
    Rat opt_price;
    Rat ratio;           // greedy/opt; 1 when D_0 = 0 (both prices zero)
    Rat harmonic_bound;  // H(D_0), 0 when D_0 = 0
    Rat refined;
    bool per_entry_ok = false;

    // ratio <= refined <= harmonic, vacuously true when D_0 = 0.
    bool bounds_hold() const;
};

RatioReport make_ratio_report(const GreedyTrace& trace, const ExactSolution& exact);

struct ExperimentParams {
    InstanceParams instance;
    int trials = 100;
};

// Trial i runs on the instance seeded with derive_seed(master_seed, i).
std::vector<RatioReport> ratio_experiment(const ExperimentParams& params,
                                          uint64_t master_seed);

}  // namespace votelab::lobby
