#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "votelab/verdict.hpp"

namespace votelab::dodgson {

// An election: distinct candidate labels and one strict total order per
// voter, most-preferred first, stored as candidate indices.
struct Election {
    std::vector<std::string> candidates;
    std::vector<std::vector<int>> votes;

    int candidate_count() const { return static_cast<int>(candidates.size()); }
    int vote_count() const { return static_cast<int>(votes.size()); }

    // Throws std::invalid_argument unless every vote is a permutation of the
    // full candidate set.
    void validate() const;
};

struct DodgsonTriple {
    Election election;
    int designated = 0;  // c, index into candidates
};

// Number of votes ranking a above b. Always pairwise_wins(e,a,b) +
// pairwise_wins(e,b,a) = n.
int pairwise_wins(const Election& e, int a, int b);

// The unique candidate beating every rival with >= floor(n/2)+1 votes, if
// one exists. A tie is not a strict majority.
std::optional<int> condorcet_winner(const Election& e);

// Votes c must gain to beat the rival pairwise: max(0, floor(n/2)+1 - wins).
int deficit_against(const DodgsonTriple& t, int rival);

// Votes in which the rival sits immediately above c.
int adjacency_count(const DodgsonTriple& t, int rival);

// Nice: every rival's deficit is covered by votes where c sits directly
// below that rival, so each needed point costs exactly one adjacent swap.
bool is_nice(const DodgsonTriple& t);

long deficit_total(const DodgsonTriple& t);

// (sum of deficits, definitely) on nice triples - where that sum provably
// equals the Dodgson score - and (sum of deficits, maybe) otherwise.
Verdict<long> greedy_score(const DodgsonTriple& t);

struct ScoreOptions {
    long max_states = 10'000'000;  // deficit-state cap for exact_score
};

// Exact Dodgson score: minimum adjacent exchanges across votes making c a
// Condorcet winner. Searches raises of c only (raising c by k in one vote
// costs k swaps and passes exactly the k candidates directly above), which
// exhausts the useful moves; exact_score_bfs certifies the restriction at
// micro scale.
long exact_score(const DodgsonTriple& t, const ScoreOptions& opts = {});

// Unrestricted oracle: BFS over whole profiles where one edge is one
// adjacent transposition in one vote, any pair. Capped at m <= 3, n <= 3
// by default; the profile space is (m!)^n, so raise with care.
long exact_score_bfs(const DodgsonTriple& t, int max_candidates = 3, int max_votes = 3);

// Scores all candidates via greedy_score. All verdicts definite: answers
// whether c attains the minimum, definitely. Otherwise compares the
// returned values best-effort and flags maybe.
Verdict<bool> greedy_winner(const DodgsonTriple& t);

// Candidates attaining the minimum exact score.
std::vector<int> dodgson_winners(const Election& e, const ScoreOptions& opts = {});

// Each vote an independent uniform permutation; labels c0..c{m-1}.
Election random_election(int candidates, int votes, uint64_t seed);

struct NicenessReport {
    int candidates = 0;
    int votes = 0;
    int trials = 0;
    int not_nice = 0;      // designated-candidate triple not nice
    int any_maybe = 0;     // some candidate's triple not nice
    double not_nice_bound = 0.0;   // 2(m-1) e^{-n/(8 m^2)}
    double any_maybe_bound = 0.0;  // 2(m^2-m) e^{-n/(8 m^2)}

    double not_nice_fraction() const;
    double any_maybe_fraction() const;
};

// Uniform elections with the designated candidate fixed to index 0
// (symmetry makes sampling it redundant).
NicenessReport niceness_trial(int candidates, int votes, int trials,
                              uint64_t master_seed);

}  // namespace votelab::dodgson
