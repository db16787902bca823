#include <doctest.h>

#include "votelab/lobby_eval.hpp"
#include "votelab/rng.hpp"

using namespace votelab;
using namespace votelab::lobby;

namespace {

NormalizedInstance norm_unit(std::vector<std::vector<uint8_t>> entries) {
    VoteMatrix v;
    v.voters = static_cast<int>(entries.size());
    v.referenda = static_cast<int>(entries.front().size());
    v.entries = std::move(entries);
    v.prices.assign(v.voters, Rat(1));
    v.target.assign(v.referenda, 1);
    return normalize(v);
}

GreedyTrace trace_of(long total_flips, std::vector<int> iteration_sizes) {
    GreedyTrace t;
    t.flips.resize(total_flips);
    t.iteration_sizes = std::move(iteration_sizes);
    return t;
}

}  // namespace

TEST_CASE("exact_opt on a zero-deficit instance is the empty set") {
    ExactSolution s = exact_opt(norm_unit({{1, 1}, {1, 1}, {1, 1}}));
    CHECK(s.rows.empty());
    CHECK(s.opt_price == 0);
}

TEST_CASE("exact_opt buys only the all-zeros voter on the tight example") {
    NormalizedInstance norm = normalize(tight_example(3, make_rat(1, 100)));
    ExactSolution s = exact_opt(norm);
    CHECK(s.rows == std::vector<int>{3});
    CHECK(s.opt_price == make_rat(101, 100));
}

TEST_CASE("exact_opt never beats a feasible greedy run") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        InstanceParams params;
        params.voters = 6;
        params.referenda = 3;
        VoteMatrix v = random_instance(params, derive_seed(11, seed));
        NormalizedInstance norm = normalize(v);
        GreedyTrace trace = greedy_lobby(norm);
        ExactSolution s = exact_opt(norm);
        CHECK(s.opt_price <= trace.total_price);
        CHECK(satisfies_target(norm.base, s.rows));  // returned subsets are feasible
        // The hint must not change the answer.
        ExactOptions opts;
        opts.hint_rows = &trace.selected_rows;
        ExactSolution hinted = exact_opt(norm, opts);
        CHECK(hinted.rows == s.rows);
        CHECK(hinted.opt_price == s.opt_price);
    }
}

TEST_CASE("exact_opt matches a literal subset enumeration") {
    // Independent oracle: walk every row mask, no pruning, no hints.
    auto brute = [](const NormalizedInstance& norm) {
        const VoteMatrix& v = norm.base;
        const DeficitVector d = deficit_sum(norm);
        std::vector<int> best_rows;
        Rat best_price;
        bool found = false;
        for (uint32_t mask = 0; mask < (uint32_t{1} << v.voters); ++mask) {
            std::vector<int> rows;
            Rat price = 0;
            for (int i = 0; i < v.voters; ++i)
                if (mask >> i & 1) {
                    rows.push_back(i);
                    price += v.prices[i];
                }
            std::vector<int> covered(v.referenda, 0);
            for (int i : rows)
                for (int j = 0; j < v.referenda; ++j)
                    if (v.entries[i][j] == 0) ++covered[j];
            bool feasible = true;
            for (int j = 0; j < v.referenda; ++j)
                feasible = feasible && covered[j] >= d.per_column[j];
            if (!feasible) continue;
            if (!found || price < best_price ||
                (price == best_price &&
                 std::lexicographical_compare(rows.begin(), rows.end(),
                                              best_rows.begin(), best_rows.end()))) {
                best_rows = rows;
                best_price = price;
                found = true;
            }
        }
        return std::pair{best_rows, best_price};
    };

    for (uint64_t seed = 0; seed < 120; ++seed) {
        InstanceParams params;
        params.voters = 1 + static_cast<int>(seed % 6);
        params.referenda = 1 + static_cast<int>(seed % 4);
        params.price_model =
            seed % 2 ? PriceModel::uniform_rational : PriceModel::unit;
        NormalizedInstance norm = normalize(random_instance(params, derive_seed(17, seed)));
        const auto [rows, price] = brute(norm);
        ExactSolution s = exact_opt(norm);
        CHECK(s.rows == rows);
        CHECK(s.opt_price == price);
    }

    // Zero-price rows exercise the equal-price lexicographic paths.
    VoteMatrix v;
    v.voters = 3;
    v.referenda = 2;
    v.entries = {{1, 0}, {0, 0}, {0, 1}};
    v.prices = {Rat(0), Rat(1), Rat(0)};
    v.target = {1, 1};
    NormalizedInstance norm = normalize(v);
    const auto [rows, price] = brute(norm);
    ExactSolution s = exact_opt(norm);
    CHECK(s.rows == rows);
    CHECK(s.opt_price == price);
}

TEST_CASE("exact_opt prefers the lexicographically smallest optimum") {
    // Rows 0 and 1 are interchangeable single-zero voters at equal price.
    ExactSolution s = exact_opt(norm_unit({{0}, {0}, {1}}));
    CHECK(s.rows == std::vector<int>{0});
    CHECK(s.opt_price == Rat(1));

    // Both columns sit one short of a majority and every voter covers just
    // one of them, so two rows are needed; {0,1} wins the four-way tie.
    ExactSolution pair = exact_opt(norm_unit({{0, 1}, {1, 0}, {0, 1}, {1, 0}}));
    CHECK(pair.rows == std::vector<int>{0, 1});
    CHECK(pair.opt_price == Rat(2));
}

TEST_CASE("exact_opt refuses instances beyond the cap") {
    InstanceParams params;
    params.voters = 19;
    params.referenda = 2;
    NormalizedInstance norm = normalize(random_instance(params, 3));
    CHECK_THROWS_AS(exact_opt(norm), std::runtime_error);
    ExactOptions opts;
    opts.max_voters = 19;
    CHECK_NOTHROW(exact_opt(norm, opts));
}

TEST_CASE("harmonic numbers are exact rationals") {
    CHECK(harmonic(1) == Rat(1));
    CHECK(harmonic(3) == make_rat(11, 6));
    CHECK_THROWS_AS(harmonic(0), std::invalid_argument);

    // Cross-sum H_10 over the common denominator 10!.
    mpz_class fact = 1;
    for (int i = 2; i <= 10; ++i) fact *= i;
    mpz_class numerator = 0;
    for (int i = 1; i <= 10; ++i) numerator += fact / i;
    Rat h10(numerator, fact);
    h10.canonicalize();
    CHECK(harmonic(10) == h10);
    CHECK(rat_string(harmonic(10)) == "7381/2520");
}

TEST_CASE("refined_bound evaluates the per-iteration sum") {
    CHECK(refined_bound(trace_of(3, {1, 1, 1})) == make_rat(11, 6));
    CHECK(refined_bound(trace_of(4, {4})) == Rat(1));
    CHECK(refined_bound(trace_of(3, {2, 1})) == make_rat(5, 3));
    CHECK(refined_bound(trace_of(3, {2, 1})) < harmonic(3));
    CHECK(refined_bound(trace_of(0, {})) == Rat(0));
}

TEST_CASE("per-entry cost bounds hold on the tight example") {
    NormalizedInstance norm = normalize(tight_example(3, make_rat(1, 100)));
    GreedyTrace trace = greedy_lobby(norm);
    Rat opt = exact_opt(norm).opt_price;
    CHECK(opt == make_rat(101, 100));
    // costs (1/3, 1/2, 1) against bounds (101/300, 101/200, 101/100)
    CHECK(trace.flips[0].cost == make_rat(1, 3));
    CHECK(opt / 3 == make_rat(101, 300));
    CHECK(per_entry_cost_violations(trace, opt).empty());
    CHECK(per_entry_cost_violations(GreedyTrace{}, opt).empty());
    // A sabotaged optimum triggers violations.
    CHECK(!per_entry_cost_violations(trace, make_rat(1, 100)).empty());
}

TEST_CASE("tight_example matches its defining layout") {
    CHECK_THROWS_AS(tight_example(1, make_rat(1, 100)), std::invalid_argument);
    CHECK_THROWS_AS(tight_example(3, Rat(0)), std::invalid_argument);

    VoteMatrix v = tight_example(4, make_rat(1, 100));
    CHECK(v.voters == 9);
    CHECK(v.referenda == 4);
    CHECK(v.prices[0] == Rat(1));
    CHECK(v.prices[3] == make_rat(1, 4));
    CHECK(v.prices[4] == make_rat(101, 100));
    CHECK(v.prices[5] == Rat(2));
    for (int j = 0; j < 4; ++j) {
        CHECK(v.entries[j][j] == 0);
        CHECK(v.entries[4][j] == 0);
        CHECK(v.entries[5 + j][j] == 1);
    }

    for (int n = 2; n <= 6; ++n) {
        NormalizedInstance norm = normalize(tight_example(n, make_rat(1, 100)));
        DeficitVector d = deficit_sum(norm);
        CHECK(d.total == n);
        for (int dj : d.per_column) CHECK(dj == 1);
    }
}

TEST_CASE("greedy pays the harmonic price on the tight example") {
    for (int n = 2; n <= 6; ++n) {
        NormalizedInstance norm = normalize(tight_example(n, make_rat(1, 100)));
        GreedyTrace trace = greedy_lobby(norm);
        CHECK(trace.total_price == harmonic(n));
        // v_n, v_{n-1}, ..., v_1 in that order.
        std::vector<int> expected;
        for (int i = n - 1; i >= 0; --i) expected.push_back(i);
        CHECK(trace.selected_rows == expected);

        ExactSolution s = exact_opt(norm);
        CHECK(s.rows == std::vector<int>{n});
        CHECK(s.opt_price == make_rat(101, 100));

        RatioReport report = make_ratio_report(trace, s);
        CHECK(report.ratio == harmonic(n) / make_rat(101, 100));
        CHECK(report.bounds_hold());
    }
}

TEST_CASE("random_instance is deterministic per seed") {
    InstanceParams params;
    params.voters = 3;
    params.referenda = 2;
    VoteMatrix a = random_instance(params, 7);
    VoteMatrix b = random_instance(params, 7);
    CHECK(a.entries == b.entries);
    CHECK(a.prices == b.prices);
    for (const auto& p : a.prices) CHECK(p == Rat(1));

    params.price_model = PriceModel::uniform_rational;
    VoteMatrix c = random_instance(params, 7);
    for (const auto& p : c.prices) {
        CHECK(p > 0);
        CHECK(p <= Rat(params.price_range));
    }
}

TEST_CASE("random entries are fair coins on average") {
    InstanceParams params;
    params.voters = 6;
    params.referenda = 4;
    long ones = 0, cells = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        VoteMatrix v = random_instance(params, derive_seed(99, seed));
        for (const auto& row : v.entries)
            for (uint8_t cell : row) {
                ones += cell;
                ++cells;
            }
    }
    const double fraction = static_cast<double>(ones) / cells;
    CHECK(fraction > 0.4);
    CHECK(fraction < 0.6);
}

TEST_CASE("ratio_experiment honors both ratio bounds on every trial") {
    ExperimentParams params;
    params.instance.voters = 6;
    params.instance.referenda = 4;
    params.instance.price_model = PriceModel::uniform_rational;
    params.trials = 40;
    bool saw_bulk_iteration = false;
    for (const RatioReport& r : ratio_experiment(params, 123)) {
        CHECK(r.per_entry_ok);
        CHECK(r.bounds_hold());
        if (r.initial_deficit == 0) {
            CHECK(r.ratio == Rat(1));
            CHECK(r.greedy_price == 0);
            CHECK(r.opt_price == 0);
        } else {
            CHECK(r.refined <= r.harmonic_bound);
            if (r.refined < r.harmonic_bound) saw_bulk_iteration = true;
        }
    }
    CHECK(saw_bulk_iteration);  // some iteration flipped more than one zero
}

TEST_CASE("refined bound equals the harmonic bound exactly for unit iterations") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        InstanceParams params;
        params.voters = 5;
        params.referenda = 4;
        VoteMatrix v = random_instance(params, derive_seed(5, seed));
        NormalizedInstance norm = normalize(v);
        GreedyTrace trace = greedy_lobby(norm);
        if (trace.flips.empty()) continue;
        bool all_single = true;
        for (int s : trace.iteration_sizes) all_single = all_single && s == 1;
        if (all_single)
            CHECK(refined_bound(trace) == harmonic(trace.flips.size()));
        else
            CHECK(refined_bound(trace) < harmonic(trace.flips.size()));
    }
}
