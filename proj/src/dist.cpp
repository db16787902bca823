#include "votelab/dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace votelab::dist {

std::string nth_string(int length, uint64_t value) {
    std::string s(length, '0');
    for (int i = 0; i < length; ++i)
        if (value >> (length - 1 - i) & 1) s[i] = '1';
    return s;
}

namespace {
int g_enumeration_cap = 20;
}

int enumeration_cap() { return g_enumeration_cap; }

void set_enumeration_cap(int cap) {
    if (cap < 1 || cap > 62)
        throw std::invalid_argument("enumeration cap must be in [1, 62]");
    g_enumeration_cap = cap;
}

void for_each_string(int length, const std::function<void(const std::string&)>& fn) {
    if (length < 0 || length > g_enumeration_cap)
        throw std::runtime_error("string enumeration capped at length " +
                                 std::to_string(g_enumeration_cap));
    std::string s(length, '0');
    const uint64_t count = uint64_t{1} << length;
    for (uint64_t v = 0; v < count; ++v) {
        for (int i = 0; i < length; ++i)
            s[i] = (v >> (length - 1 - i) & 1) ? '1' : '0';
        fn(s);
    }
}

Rat LengthDistribution::length_sum(int n) const {
    Rat sum = 0;
    for_each_string(n, [&](const std::string& x) { sum += weight(x); });
    sum.canonicalize();
    return sum;
}

void PiercedSet::check_piercing(int n) const {
    if (n < threshold) return;
    const std::string p = pos(n), q = neg(n);
    if (static_cast<int>(p.size()) != n || static_cast<int>(q.size()) != n)
        throw std::logic_error(name + ": piercing strings have the wrong length");
    if (p == q) throw std::logic_error(name + ": pos and neg coincide at length " +
                                       std::to_string(n));
    if (!oracle(p)) throw std::logic_error(name + ": pos string is not a member");
    if (oracle(q)) throw std::logic_error(name + ": neg string is a member");
}

Rat uniform_density(const std::string& x) {
    const long n = static_cast<long>(x.size());
    if (n == 0) return 0;
    Rat q(mpz_class(1), mpz_class(n) * (n + 1) * (mpz_class(1) << n));
    q.canonicalize();
    return q;
}

Rat uniform_length_mass(int n) {
    if (n < 1) throw std::invalid_argument("length mass needs n >= 1");
    return make_rat(1, static_cast<long>(n) * (n + 1));
}

Rat uniform_cumulative_mass(int n) {
    if (n < 1) throw std::invalid_argument("cumulative mass needs n >= 1");
    return make_rat(n, n + 1);
}

LengthDistribution uniform_per_length() {
    return {"uniform", [](const std::string& x) {
                return pow2_rat(-static_cast<long>(x.size()));
            }};
}

LengthDistribution junta_from_pierced(const PiercedSet& p, int exponent) {
    if (exponent < 2) throw std::invalid_argument("junta exponent must be >= 2");
    const int threshold = p.threshold;
    auto pos = p.pos;
    auto neg = p.neg;
    const std::string name = p.name;
    return {p.name + "-junta",
            [=](const std::string& x) -> Rat {
                const long n = static_cast<long>(x.size());
                if (n < threshold) return pow2_rat(-n);
                const std::string lo = pos(static_cast<int>(n));
                const std::string hi = neg(static_cast<int>(n));
                if (lo == hi)
                    throw std::logic_error(name + ": invalid piercing at length " +
                                           std::to_string(n));
                long e = 1;
                for (int i = 0; i < exponent; ++i) {
                    e *= n;  // n^exponent
                    if (e > 1'000'000)
                        throw std::invalid_argument(
                            name + ": junta denominator exponent exceeds 10^6 bits");
                }
                if (x != lo && x != hi) return pow2_rat(-e);
                // (1/2) (1 - (2^n - 2) / 2^{n^exponent})
                Rat small = Rat((mpz_class(1) << n) - 2, mpz_class(1) << e);
                small.canonicalize();
                Rat w = (1 - small) / 2;
                w.canonicalize();
                return w;
            }};
}

bool check_dichotomy(const LengthDistribution& d, int n, long p_of_n) {
    const Rat floor = pow2_rat(-p_of_n);
    bool ok = true;
    for_each_string(n, [&](const std::string& x) {
        const Rat w = d.weight(x);
        if (w != 0 && w < floor) ok = false;
    });
    return ok;
}

bool check_balance(const LengthDistribution& d, const MembershipOracle& oracle,
                   int n, long c) {
    if (c <= 1) throw std::invalid_argument("balance constant must exceed 1");
    Rat inside = 0;
    for_each_string(n, [&](const std::string& x) {
        if (oracle(x)) inside += d.weight(x);
    });
    inside.canonicalize();
    const Rat lo = make_rat(1, c);
    return lo <= inside && inside <= 1 - lo;
}

bool pierced_heuristic(const PiercedSet& p, const std::string& x) {
    const int n = static_cast<int>(x.size());
    if (n < p.threshold) return true;
    return x != p.neg(n);
}

Rat heuristic_error_weight(const LengthDistribution& d, const MembershipOracle& oracle,
                           const std::function<bool(const std::string&)>& algorithm,
                           int n) {
    Rat err = 0;
    for_each_string(n, [&](const std::string& x) {
        if (algorithm(x) != oracle(x)) err += d.weight(x);
    });
    err.canonicalize();
    return err;
}

Verdict<long> fskc_from_benign(const BenignScheme& scheme, const std::string& x) {
    const mpz_class n1 = static_cast<long>(x.size()) + 1;
    Rat delta(mpz_class(1), n1 * n1 * n1);
    delta.canonicalize();
    const std::optional<long> answer = scheme(x, delta);
    if (!answer) return {kMaybeSentinel, Flag::maybe};
    return {*answer, Flag::definitely};
}

Rat maybe_rate(const std::function<Flag(const std::string&)>& algorithm, int n) {
    long maybes = 0;
    for_each_string(n, [&](const std::string& x) {
        if (algorithm(x) == Flag::maybe) ++maybes;
    });
    Rat rate(maybes, mpz_class(1) << n);
    rate.canonicalize();
    return rate;
}

std::string pad_reduce(const std::string& x) {
    const size_t len = x.size();
    return "1" + x + std::string(len * len + 2, '1');
}

MembershipOracle padded_oracle(const MembershipOracle& a) {
    return [a](const std::string& s) {
        if (s.size() >= 2 && s[0] == '0' && s[1] == '0') return true;
        if (s.empty() || s[0] != '1') return false;
        // Solve q^2 + q + 3 = |s| for integer q >= 0, then demand the
        // trailing q^2 + 2 characters are all ones.
        const size_t total = s.size();
        size_t q = 0;
        while (q * q + q + 3 < total) ++q;
        if (q * q + q + 3 != total) return false;
        for (size_t i = 1 + q; i < total; ++i)
            if (s[i] != '1') return false;
        return a(s.substr(1, q));
    };
}

bool padded_trivial_heuristic(const std::string& x) {
    return x.size() >= 2 && x[0] == '0' && x[1] == '0';
}

PiercedSet majority_pierced() {
    PiercedSet p;
    p.name = "majority";
    p.oracle = [](const std::string& x) {
        return 2 * std::count(x.begin(), x.end(), '1') > static_cast<long>(x.size());
    };
    p.pos = [](int n) { return std::string(n, '1'); };
    p.neg = [](int n) { return std::string(n, '0'); };
    p.threshold = 2;
    return p;
}

PiercedSet first_bit_pierced() {
    PiercedSet p;
    p.name = "first-bit";
    p.oracle = [](const std::string& x) { return !x.empty() && x[0] == '1'; };
    p.pos = [](int n) {
        if (n < 1) throw std::invalid_argument("first-bit piercing starts at length 1");
        return "1" + std::string(n - 1, '0');
    };
    p.neg = [](int n) { return std::string(n, '0'); };
    p.threshold = 1;
    return p;
}

namespace {

// Literal = 3 bits (2-bit variable, 1-bit negation), clause = 3 literals,
// formula = 3 clauses over variables v0..v3; missing bits read as zero.
bool sat3_satisfiable(const std::string& x) {
    auto bit = [&](size_t i) { return i < x.size() && x[i] == '1'; };
    for (int assignment = 0; assignment < 16; ++assignment) {
        bool all_clauses = true;
        for (int clause = 0; clause < 3 && all_clauses; ++clause) {
            bool any_literal = false;
            for (int lit = 0; lit < 3 && !any_literal; ++lit) {
                const size_t base = static_cast<size_t>(clause) * 9 + lit * 3;
                const int var = (bit(base) ? 2 : 0) + (bit(base + 1) ? 1 : 0);
                const bool negated = bit(base + 2);
                const bool value = (assignment >> var) & 1;
                any_literal = negated ? !value : value;
            }
            all_clauses = any_literal;
        }
        if (all_clauses) return true;
    }
    return false;
}

}  // namespace

MembershipOracle sat3_oracle() {
    return sat3_satisfiable;
}

PiercedSet sat3_pierced() {
    PiercedSet p;
    p.name = "sat3";
    p.oracle = sat3_oracle();
    // All-zero bits parse as (v0 v0 v0) three times: satisfiable.
    p.pos = [](int n) { return std::string(n, '0'); };
    // Clause 2 reads (~v0 ~v0 ~v0), contradicting clauses 1 and 3.
    p.neg = [](int n) {
        std::string s(n, '0');
        s.at(17) = '1';
        s[11] = s[14] = '1';
        return s;
    };
    p.threshold = 18;
    return p;
}

long parity_of_ones(const std::string& x) {
    return std::count(x.begin(), x.end(), '1') % 2;
}

BenignScheme parity_benign_scheme(int concentrate_length) {
    return [concentrate_length](const std::string& x,
                                const Rat& delta) -> std::optional<long> {
        const long n = static_cast<long>(x.size());
        if (n >= 1) {
            mpz_class budget;  // strings allowed to answer '?' at this length
            if (concentrate_length == 0) {
                // floor(delta 2^n) per length keeps every cumulative mixture
                // of per-length '?'-rates at or below delta.
                budget = (delta.get_num() << n) / delta.get_den();
            } else if (n == concentrate_length) {
                // The whole budget at one length: mass delta W_n spent where
                // the length's share of the cumulative distribution is
                // w_n / W_n, allowing a factor n^2 more strings.
                budget = (delta.get_num() << n) * n * n / delta.get_den();
            }
            if (budget > 0) {
                mpz_class rank = 0;
                for (char c : x) rank = rank * 2 + (c == '1');
                if (rank < budget) return std::nullopt;
            }
        }
        return parity_of_ones(x);
    };
}

}  // namespace votelab::dist
