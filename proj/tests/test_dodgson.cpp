#include <doctest.h>

#include <algorithm>
#include <map>

#include "votelab/dodgson.hpp"
#include "votelab/rng.hpp"

using namespace votelab;
using namespace votelab::dodgson;

namespace {

// Votes written as label strings, e.g. {"dec"} is d > e > c.
Election election_of(const std::string& labels, const std::vector<std::string>& votes) {
    Election e;
    for (char c : labels) e.candidates.emplace_back(1, c);
    for (const auto& vote : votes) {
        std::vector<int> order;
        for (char c : vote)
            order.push_back(static_cast<int>(labels.find(c)));
        e.votes.push_back(order);
    }
    return e;
}

std::vector<std::vector<int>> all_perms(int m) {
    std::vector<int> ident(m);
    for (int i = 0; i < m; ++i) ident[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(ident);
    } while (std::next_permutation(ident.begin(), ident.end()));
    return out;
}

}  // namespace

TEST_CASE("pairwise_wins counts votes ranking a above b") {
    Election e = election_of("abc", {"abc"});
    CHECK(pairwise_wins(e, 0, 1) == 1);
    CHECK(pairwise_wins(e, 1, 0) == 0);

    Election three = election_of("ab", {"ab", "ab", "ab"});
    CHECK(pairwise_wins(three, 0, 1) == 3);

    Election split = election_of("ab", {"ab", "ba"});
    CHECK(pairwise_wins(split, 0, 1) == 1);
    CHECK(pairwise_wins(split, 0, 1) + pairwise_wins(split, 1, 0) == 2);
    CHECK_THROWS_AS(pairwise_wins(split, 0, 0), std::invalid_argument);
}

TEST_CASE("condorcet_winner needs a strict pairwise majority over everyone") {
    CHECK(condorcet_winner(election_of("abc", {"abc", "abc", "abc"})) == 0);
    CHECK(!condorcet_winner(election_of("abc", {"abc", "bca", "cab"})).has_value());
    CHECK(!condorcet_winner(election_of("ab", {"ab", "ba"})).has_value());
}

TEST_CASE("deficit_against measures missing pairwise votes") {
    Election beats = election_of("cd", {"cd", "cd", "dc"});
    CHECK(deficit_against({beats, 0}, 1) == 0);

    Election behind = election_of("cd", {"cd", "dc", "dc"});
    CHECK(deficit_against({behind, 0}, 1) == 1);

    Election single = election_of("dec", {"dec"});
    CHECK(deficit_against({single, 2}, 0) == 1);
    CHECK_THROWS_AS(deficit_against({single, 2}, 2), std::invalid_argument);
}

TEST_CASE("adjacency_count finds the rival directly above the candidate") {
    CHECK(adjacency_count({election_of("dc", {"dc"}), 1}, 0) == 1);

    DodgsonTriple t{election_of("dec", {"dec"}), 2};
    CHECK(adjacency_count(t, 0) == 0);
    CHECK(adjacency_count(t, 1) == 1);

    DodgsonTriple top{election_of("cde", {"cde", "ced"}), 0};
    CHECK(adjacency_count(top, 1) == 0);
    CHECK(adjacency_count(top, 2) == 0);
}

TEST_CASE("niceness holds exactly when every deficit is matched by adjacencies") {
    CHECK(is_nice({election_of("cd", {"cd", "cd", "cd"}), 0}));

    // Deficit[d]=1 with two d-over-c adjacencies.
    CHECK(is_nice({election_of("dc", {"dc", "dc", "cd"}), 1}));

    // Deficit[d]=1 but d never sits directly above c.
    CHECK(!is_nice({election_of("dec", {"dec"}), 2}));
}

TEST_CASE("greedy_score answers definitely exactly on nice triples") {
    Verdict<long> condorcet = greedy_score({election_of("cd", {"cd", "cd", "cd"}), 0});
    CHECK(condorcet.value == 0);
    CHECK(condorcet.definite());

    Verdict<long> nice = greedy_score({election_of("dc", {"dc", "dc", "cd"}), 1});
    CHECK(nice.value == 1);
    CHECK(nice.definite());

    Verdict<long> rough = greedy_score({election_of("dec", {"dec"}), 2});
    CHECK(rough.value == 2);
    CHECK(!rough.definite());
}

TEST_CASE("exact_score on hand-checked triples") {
    CHECK(exact_score({election_of("cd", {"cd", "cd", "cd"}), 0}) == 0);
    CHECK(exact_score({election_of("dec", {"dec"}), 2}) == 2);
    CHECK(exact_score({election_of("dc", {"dc", "dc", "cd"}), 1}) == 1);
}

TEST_CASE("exact_score equals the BFS oracle on every micro profile") {
    // All single-vote and two-vote elections over three candidates.
    const auto perms = all_perms(3);
    Election e;
    e.candidates = {"a", "b", "c"};
    for (const auto& p : perms) {
        e.votes = {p};
        for (int c = 0; c < 3; ++c) {
            long fast = exact_score({e, c});
            CHECK(fast == exact_score_bfs({e, c}));
            CHECK(fast >= deficit_total({e, c}));
        }
        for (const auto& q : perms) {
            e.votes = {p, q};
            for (int c = 0; c < 3; ++c)
                CHECK(exact_score({e, c}) == exact_score_bfs({e, c}));
        }
    }
}

TEST_CASE("exact_score is zero exactly for Condorcet winners") {
    Xoshiro256 rng(31);
    for (int round = 0; round < 300; ++round) {
        const int m = 2 + static_cast<int>(rng.uniform_below(3));
        const int n = 1 + static_cast<int>(rng.uniform_below(5));
        Election e = random_election(m, n, rng.next());
        const auto winner = condorcet_winner(e);
        for (int c = 0; c < m; ++c) {
            const long score = exact_score({e, c});
            CHECK((score == 0) == (winner.has_value() && *winner == c));
            Verdict<long> greedy = greedy_score({e, c});
            CHECK(score >= greedy.value);  // deficit sum never overshoots
            if (greedy.definite()) CHECK(score == greedy.value);
        }
    }
}

TEST_CASE("exact_score_bfs rejects beyond the micro cap") {
    CHECK_THROWS_AS(exact_score_bfs({random_election(4, 2, 1), 0}), std::runtime_error);
    CHECK_THROWS_AS(exact_score_bfs({random_election(3, 4, 1), 0}), std::runtime_error);
}

TEST_CASE("greedy_winner composes the per-candidate verdicts") {
    Verdict<bool> sure = greedy_winner({election_of("cd", {"cd", "cd"}), 0});
    CHECK(sure.value);
    CHECK(sure.definite());

    // With three candidates a unanimous vote leaves the bottom candidate's
    // triple rough (the leader sits two positions up), so the flag degrades
    // to maybe even though the comparison itself is right.
    Verdict<bool> top = greedy_winner({election_of("cab", {"cab", "cab"}), 0});
    CHECK(top.value);
    CHECK(!top.definite());

    Verdict<bool> unsure = greedy_winner({election_of("dec", {"dec"}), 2});
    CHECK(!unsure.definite());

    // Any definite answer agrees with the exact winner set.
    Xoshiro256 rng(77);
    int definite_count = 0;
    for (int round = 0; round < 400; ++round) {
        const int m = 1 + static_cast<int>(rng.uniform_below(3));
        const int n = 1 + static_cast<int>(rng.uniform_below(4));
        Election e = random_election(m, n, rng.next());
        const auto winners = dodgson_winners(e);
        bool every_score_definite = true;
        for (int c = 0; c < m; ++c)
            every_score_definite =
                every_score_definite && greedy_score({e, c}).definite();
        for (int c = 0; c < m; ++c) {
            Verdict<bool> verdict = greedy_winner({e, c});
            CHECK(verdict.definite() == every_score_definite);
            if (verdict.definite()) {
                ++definite_count;
                const bool wins =
                    std::find(winners.begin(), winners.end(), c) != winners.end();
                CHECK(verdict.value == wins);
            }
        }
    }
    CHECK(definite_count > 0);
}

TEST_CASE("dodgson_winners collects every minimum-score candidate") {
    CHECK(dodgson_winners(election_of("abc", {"abc", "abc", "abc"})) ==
          std::vector<int>{0});
    CHECK(dodgson_winners(election_of("abc", {"abc", "bca", "cab"})) ==
          std::vector<int>{0, 1, 2});
    CHECK(dodgson_winners(election_of("dc", {"dc", "dc", "cd"})) ==
          std::vector<int>{0});
}

TEST_CASE("random_election produces uniform independent votes") {
    Election solo = random_election(1, 5, 9);
    for (const auto& vote : solo.votes) CHECK(vote == std::vector<int>{0});

    Election a = random_election(3, 4, 123);
    Election b = random_election(3, 4, 123);
    CHECK(a.votes == b.votes);

    std::map<std::vector<int>, int> counts;
    for (uint64_t s = 0; s < 6000; ++s)
        ++counts[random_election(3, 1, derive_seed(55, s)).votes[0]];
    CHECK(counts.size() == 6);
    for (const auto& [perm, count] : counts) {
        CHECK(count > 850);
        CHECK(count < 1150);
    }
}

TEST_CASE("niceness_trial evaluates the probability bounds") {
    NicenessReport r = niceness_trial(2, 100, 200, 2024);
    CHECK(r.not_nice_bound == doctest::Approx(0.0879).epsilon(0.01));
    CHECK(r.any_maybe_bound == doctest::Approx(0.1758).epsilon(0.01));
    CHECK(r.not_nice_fraction() <= r.not_nice_bound + 0.05);
    CHECK(r.any_maybe >= r.not_nice);

    NicenessReport solo = niceness_trial(1, 10, 100, 5);
    CHECK(solo.not_nice == 0);
    CHECK(solo.any_maybe == 0);
}

TEST_CASE("invalid elections are rejected") {
    Election dup;
    dup.candidates = {"a", "a"};
    dup.votes = {{0, 1}};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);

    Election twice;
    twice.candidates = {"a", "b"};
    twice.votes = {{0, 0}};
    CHECK_THROWS_AS(twice.validate(), std::invalid_argument);

    Election missing;
    missing.candidates = {"a", "b"};
    missing.votes = {{0}};
    CHECK_THROWS_AS(missing.validate(), std::invalid_argument);
}
