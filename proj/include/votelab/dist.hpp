#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "votelab/rational.hpp"
#include "votelab/verdict.hpp"

namespace votelab::dist {

// Binary strings are std::strings over {'0','1'}; lexicographic order is
// plain string order. The helpers below enumerate a whole length.

std::string nth_string(int length, uint64_t value);  // value's bits, MSB first
void for_each_string(int length, const std::function<void(const std::string&)>& fn);

// Guard on 2^n enumerations, default 20. Raising it is loud and deliberate.
int enumeration_cap();
void set_enumeration_cap(int cap);

// A family of per-length distributions: weight(x) depends only on x and |x|,
// and for each supported length the weights over all 2^n strings sum to 1.
// There is deliberately no global distribution over all strings.
class LengthDistribution {
public:
    LengthDistribution() = default;
    LengthDistribution(std::string name, std::function<Rat(const std::string&)> weight)
        : name_(std::move(name)), weight_(std::move(weight)) {}

    Rat weight(const std::string& x) const { return weight_(x); }
    const std::string& name() const { return name_; }

    Rat length_sum(int n) const;  // exact sum over all 2^n strings

private:
    std::string name_;
    std::function<Rat(const std::string&)> weight_;
};

// Decidable predicate standing in for the set L.
using MembershipOracle = std::function<bool(const std::string&)>;

// A set with one easily recognizable member (pos) and non-member (neg) at
// every length >= threshold.
struct PiercedSet {
    std::string name;
    MembershipOracle oracle;
    std::function<std::string(int)> pos;
    std::function<std::string(int)> neg;
    int threshold = 1;  // N

    // Checks pos(n) != neg(n), pos(n) in L, neg(n) not in L for one length.
    void check_piercing(int n) const;
};

// --- the standard uniform distribution over all nonempty strings ---

// 1/(|x| (|x|+1) 2^{|x|}); the empty string has weight 0 by convention.
Rat uniform_density(const std::string& x);

Rat uniform_length_mass(int n);      // 1/(n(n+1)), n >= 1
Rat uniform_cumulative_mass(int n);  // n/(n+1), telescoped

// Uniform within each length: every length-n string weighs 1/2^n.
LengthDistribution uniform_per_length();

// --- junta construction over a pierced set ---

// For n >= threshold, every string weighs 1/2^{n^exponent} except pos(n) and
// neg(n), which each take (1/2)(1 - (2^n - 2)/2^{n^exponent}); below the
// threshold each length is uniform. exponent = 2 gives the 1/2^{n^2 - n}
// error regime; larger exponents sharpen it.
LengthDistribution junta_from_pierced(const PiercedSet& p, int exponent = 2);

// Every length-n weight is 0 or >= 2^{-p_of_n}.
bool check_dichotomy(const LengthDistribution& d, int n, long p_of_n);

// 1/c <= Prob_{d_n}[x in L] <= 1 - 1/c, computed exactly by enumeration.
bool check_balance(const LengthDistribution& d, const MembershipOracle& oracle,
                   int n, long c);

// Accepts everything except neg(|x|); in particular accepts pos(|x|) and all
// strings below the threshold.
bool pierced_heuristic(const PiercedSet& p, const std::string& x);

// Probability weight, under d at length n, of strings where the algorithm
// disagrees with the oracle.
Rat heuristic_error_weight(const LengthDistribution& d, const MembershipOracle& oracle,
                           const std::function<bool(const std::string&)>& algorithm,
                           int n);

// --- benign schemes and the self-knowing wrapper ---

// A scheme may answer nullopt ("?") but any value it does return must be
// correct; its '?'-probability under the cumulative uniform distribution
// through any length is at most delta.
using BenignScheme =
    std::function<std::optional<long>(const std::string&, const Rat& delta)>;

inline constexpr long kMaybeSentinel = -1;

// Runs the scheme at delta = 1/(|x|+1)^3 and lifts '?' to (sentinel, maybe),
// anything else to (value, definitely).
Verdict<long> fskc_from_benign(const BenignScheme& scheme, const std::string& x);

// Fraction of length-n strings on which the algorithm flags maybe.
Rat maybe_rate(const std::function<Flag(const std::string&)>& algorithm, int n);

// --- padding transform ---

// x -> 1 x 1^{|x|^2 + 2}; injective, output length |x|^2 + |x| + 3.
std::string pad_reduce(const std::string& x);

// Decides {00s | any s} union {pad_reduce(x) | x in A}: strings starting 00
// are members outright; a string starting 1 is parsed back (the unique
// nonnegative |x| with |x|^2+|x|+3 = L, then the trailing ones are checked)
// and membership defers to a.
MembershipOracle padded_oracle(const MembershipOracle& a);

// Accepts exactly the strings starting 00. Errs only on padded members.
bool padded_trivial_heuristic(const std::string& x);

// --- fixtures ---

// Majority of ones, pierced by 1^n / 0^n; declared threshold 2.
PiercedSet majority_pierced();

// First bit set, pierced by 10^{n-1} / 0^n from length 1.
PiercedSet first_bit_pierced();

// Satisfiability of a 3-clause formula over 4 variables packed into the
// first 27 bits (3 bits per literal: 2-bit variable, 1-bit negation;
// shorter strings are zero-padded). Pierced from length 18 by the all-zeros
// string (trivially satisfiable) and a v0 / not-v0 contradiction.
MembershipOracle sat3_oracle();
PiercedSet sat3_pierced();

// Parity-of-ones benign scheme: answers '?' on the lexicographically first
// floor(delta 2^L) strings of each length L, parity everywhere else. With
// concentrate_length >= 1, the whole '?' budget moves to that single length
// (floor(delta 2^L L^2) strings there, none elsewhere); both variants honor
// the cumulative-delta contract.
BenignScheme parity_benign_scheme(int concentrate_length = 0);

long parity_of_ones(const std::string& x);

}  // namespace votelab::dist
