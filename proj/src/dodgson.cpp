#include "votelab/dodgson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

#include "votelab/rng.hpp"

namespace votelab::dodgson {

void Election::validate() const {
    const int m = candidate_count();
    if (m < 1) throw std::invalid_argument("election needs at least one candidate");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (candidates[i] == candidates[j])
                throw std::invalid_argument("duplicate candidate label '" + candidates[i] + "'");
    std::vector<uint8_t> seen(m);
    for (const auto& vote : votes) {
        if (static_cast<int>(vote.size()) != m)
            throw std::invalid_argument("vote does not rank every candidate");
        std::fill(seen.begin(), seen.end(), 0);
        for (int c : vote) {
            if (c < 0 || c >= m) throw std::invalid_argument("vote names an unknown candidate");
            if (seen[c]) throw std::invalid_argument("vote ranks a candidate twice");
            seen[c] = 1;
        }
    }
}

namespace {

int strict_majority(int n) { return n / 2 + 1; }

void check_candidate(const Election& e, int c) {
    if (c < 0 || c >= e.candidate_count())
        throw std::invalid_argument("unknown candidate index");
}

void check_rival(const DodgsonTriple& t, int rival) {
    check_candidate(t.election, rival);
    if (rival == t.designated)
        throw std::invalid_argument("rival must differ from the designated candidate");
}

// positions[v][c] = rank of candidate c in vote v (0 = most preferred).
std::vector<std::vector<int>> rank_table(const Election& e) {
    std::vector<std::vector<int>> pos(e.vote_count(), std::vector<int>(e.candidate_count()));
    for (int v = 0; v < e.vote_count(); ++v)
        for (int r = 0; r < e.candidate_count(); ++r) pos[v][e.votes[v][r]] = r;
    return pos;
}

}  // namespace

int pairwise_wins(const Election& e, int a, int b) {
    check_candidate(e, a);
    check_candidate(e, b);
    if (a == b) throw std::invalid_argument("pairwise contest needs distinct candidates");
    int wins = 0;
    for (const auto& vote : e.votes) {
        for (int c : vote) {
            if (c == a) {
                ++wins;
                break;
            }
            if (c == b) break;
        }
    }
    return wins;
}

std::optional<int> condorcet_winner(const Election& e) {
    e.validate();
    const int m = e.candidate_count();
    const int need = strict_majority(e.vote_count());
    auto pos = rank_table(e);
    for (int i = 0; i < m; ++i) {
        bool beats_all = true;
        for (int j = 0; j < m && beats_all; ++j) {
            if (j == i) continue;
            int wins = 0;
            for (int v = 0; v < e.vote_count(); ++v)
                if (pos[v][i] < pos[v][j]) ++wins;
            beats_all = wins >= need;
        }
        if (beats_all) return i;
    }
    return std::nullopt;
}

int deficit_against(const DodgsonTriple& t, int rival) {
    check_rival(t, rival);
    const int need = strict_majority(t.election.vote_count());
    return std::max(0, need - pairwise_wins(t.election, t.designated, rival));
}

int adjacency_count(const DodgsonTriple& t, int rival) {
    check_rival(t, rival);
    int count = 0;
    for (const auto& vote : t.election.votes)
        for (size_t r = 0; r + 1 < vote.size(); ++r)
            if (vote[r] == rival && vote[r + 1] == t.designated) ++count;
    return count;
}

bool is_nice(const DodgsonTriple& t) {
    for (int d = 0; d < t.election.candidate_count(); ++d) {
        if (d == t.designated) continue;
        if (adjacency_count(t, d) < deficit_against(t, d)) return false;
    }
    return true;
}

long deficit_total(const DodgsonTriple& t) {
    long sum = 0;
    for (int d = 0; d < t.election.candidate_count(); ++d)
        if (d != t.designated) sum += deficit_against(t, d);
    return sum;
}

Verdict<long> greedy_score(const DodgsonTriple& t) {
    const long sum = deficit_total(t);
    return {sum, is_nice(t) ? Flag::definitely : Flag::maybe};
}

long exact_score(const DodgsonTriple& t, const ScoreOptions& opts) {
    const Election& e = t.election;
    e.validate();
    check_candidate(e, t.designated);
    const int m = e.candidate_count();
    const int n = e.vote_count();
    const int c = t.designated;

    // Rivals with a positive deficit span the DP state; raising c past a
    // rival in one vote clears one unit of that rival's deficit.
    std::vector<int> rival_slot(m, -1);
    std::vector<int> radix;
    std::vector<long> stride;
    long states = 1;
    for (int d = 0; d < m; ++d) {
        if (d == c) continue;
        int deficit = deficit_against(t, d);
        if (deficit == 0) continue;
        rival_slot[d] = static_cast<int>(radix.size());
        radix.push_back(deficit + 1);
        stride.push_back(states);
        states *= deficit + 1;
        if (states > opts.max_states)
            throw std::runtime_error("exact_score: deficit state space exceeds the cap");
    }
    if (radix.empty()) return 0;

    long start = 0;
    for (size_t s = 0; s < radix.size(); ++s) start += (radix[s] - 1) * stride[s];

    const long kInf = std::numeric_limits<long>::max() / 2;
    // dp[s] = cheapest way to clear residual deficits s with the votes not
    // yet processed; computed backwards over votes.
    std::vector<long> dp(states, kInf), next(states);
    dp[0] = 0;
    auto pos = rank_table(e);
    for (int v = n - 1; v >= 0; --v) {
        const int c_rank = pos[v][c];
        for (long s = 0; s < states; ++s) {
            long best = dp[s];  // raise 0 positions in this vote
            long reached = s;
            for (int k = 1; k <= c_rank; ++k) {
                const int passed = e.votes[v][c_rank - k];
                const int slot = rival_slot[passed];
                if (slot >= 0 && (reached / stride[slot]) % radix[slot] > 0)
                    reached -= stride[slot];
                if (dp[reached] < kInf) best = std::min(best, k + dp[reached]);
            }
            next[s] = best;
        }
        dp.swap(next);
    }
    return dp[start];
}

namespace {

std::vector<std::vector<int>> permutations_of(int m) {
    std::vector<int> ident(m);
    for (int i = 0; i < m; ++i) ident[i] = i;
    std::vector<std::vector<int>> all;
    do {
        all.push_back(ident);
    } while (std::next_permutation(ident.begin(), ident.end()));
    return all;
}

bool is_condorcet_in_profile(const std::vector<const std::vector<int>*>& votes, int m, int c) {
    const int need = strict_majority(static_cast<int>(votes.size()));
    for (int d = 0; d < m; ++d) {
        if (d == c) continue;
        int wins = 0;
        for (const auto* vote : votes) {
            for (int x : *vote) {
                if (x == c) {
                    ++wins;
                    break;
                }
                if (x == d) break;
            }
        }
        if (wins < need) return false;
    }
    return true;
}

}  // namespace

long exact_score_bfs(const DodgsonTriple& t, int max_candidates, int max_votes) {
    const Election& e = t.election;
    e.validate();
    check_candidate(e, t.designated);
    const int m = e.candidate_count();
    const int n = e.vote_count();
    if (m > max_candidates || n > max_votes)
        throw std::runtime_error("exact_score_bfs is capped at " +
                                 std::to_string(max_candidates) + " candidates and " +
                                 std::to_string(max_votes) + " votes");

    const auto perms = permutations_of(m);
    const int perm_count = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> perm_index;
    for (int i = 0; i < perm_count; ++i) perm_index[perms[i]] = i;

    // A profile is a tuple of permutation indices, packed base perm_count.
    long profile_count = 1;
    for (int v = 0; v < n; ++v) profile_count *= perm_count;

    auto is_goal = [&](long code) {
        std::vector<const std::vector<int>*> votes(n);
        for (int v = 0; v < n; ++v) {
            votes[v] = &perms[code % perm_count];
            code /= perm_count;
        }
        return is_condorcet_in_profile(votes, m, t.designated);
    };

    long start = 0;
    for (int v = n - 1; v >= 0; --v) start = start * perm_count + perm_index.at(e.votes[v]);

    std::vector<int> distance(profile_count, -1);
    std::queue<long> frontier;
    distance[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
        const long code = frontier.front();
        frontier.pop();
        if (is_goal(code)) return distance[code];
        // One adjacent transposition in one vote, any pair.
        long scale = 1;
        long rest = code;
        for (int v = 0; v < n; ++v, rest /= perm_count, scale *= perm_count) {
            const int p = rest % perm_count;
            for (int r = 0; r + 1 < m; ++r) {
                std::vector<int> swapped = perms[p];
                std::swap(swapped[r], swapped[r + 1]);
                const long neighbor = code + (perm_index.at(swapped) - p) * scale;
                if (distance[neighbor] < 0) {
                    distance[neighbor] = distance[code] + 1;
                    frontier.push(neighbor);
                }
            }
        }
    }
    throw std::logic_error("profile space exhausted without a Condorcet profile");
}

Verdict<bool> greedy_winner(const DodgsonTriple& t) {
    const Election& e = t.election;
    e.validate();
    check_candidate(e, t.designated);
    long best = std::numeric_limits<long>::max();
    bool all_definite = true;
    std::vector<long> scores(e.candidate_count());
    for (int c = 0; c < e.candidate_count(); ++c) {
        Verdict<long> verdict = greedy_score({e, c});
        scores[c] = verdict.value;
        all_definite = all_definite && verdict.definite();
        best = std::min(best, verdict.value);
    }
    return {scores[t.designated] == best,
            all_definite ? Flag::definitely : Flag::maybe};
}

std::vector<int> dodgson_winners(const Election& e, const ScoreOptions& opts) {
    e.validate();
    std::vector<long> scores(e.candidate_count());
    long best = std::numeric_limits<long>::max();
    for (int c = 0; c < e.candidate_count(); ++c) {
        scores[c] = exact_score({e, c}, opts);
        best = std::min(best, scores[c]);
    }
    std::vector<int> winners;
    for (int c = 0; c < e.candidate_count(); ++c)
        if (scores[c] == best) winners.push_back(c);
    return winners;
}

Election random_election(int candidates, int votes, uint64_t seed) {
    if (candidates < 1 || votes < 1)
        throw std::invalid_argument("random_election needs m, n >= 1");
    Xoshiro256 rng(seed);
    Election e;
    e.candidates.resize(candidates);
    for (int c = 0; c < candidates; ++c) e.candidates[c] = "c" + std::to_string(c);
    e.votes.assign(votes, std::vector<int>(candidates));
    for (auto& vote : e.votes) {
        for (int c = 0; c < candidates; ++c) vote[c] = c;
        for (int i = candidates - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.uniform_below(i + 1));
            std::swap(vote[i], vote[j]);
        }
    }
    return e;
}

double NicenessReport::not_nice_fraction() const {
    return trials ? static_cast<double>(not_nice) / trials : 0.0;
}

double NicenessReport::any_maybe_fraction() const {
    return trials ? static_cast<double>(any_maybe) / trials : 0.0;
}

NicenessReport niceness_trial(int candidates, int votes, int trials,
                              uint64_t master_seed) {
    if (trials < 1) throw std::invalid_argument("niceness_trial needs trials >= 1");
    NicenessReport report;
    report.candidates = candidates;
    report.votes = votes;
    report.trials = trials;
    const double decay = std::exp(-static_cast<double>(votes) /
                                  (8.0 * candidates * candidates));
    report.not_nice_bound = 2.0 * (candidates - 1) * decay;
    report.any_maybe_bound = 2.0 * (static_cast<double>(candidates) * candidates - candidates) * decay;

    for (int trial = 0; trial < trials; ++trial) {
        Election e = random_election(candidates, votes, derive_seed(master_seed, trial));
        if (!is_nice({e, 0})) ++report.not_nice;
        for (int c = 0; c < candidates; ++c) {
            if (!is_nice({e, c})) {
                ++report.any_maybe;
                break;
            }
        }
    }
    return report;
}

}  // namespace votelab::dodgson
