#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace votelab {

// Exact rational arithmetic everywhere; floats appear only when a bound
// involves e or ln.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat pow2_rat(long exponent) {
    if (exponent >= 0) return Rat(mpz_class(1) << exponent);
    Rat q(mpz_class(1), mpz_class(1) << (-exponent));
    q.canonicalize();
    return q;
}

// Canonical form: "num" when integral, otherwise "num/den".
inline std::string rat_string(const Rat& q) { return q.get_str(); }

// Accepts "3", "-2", "1/3". Rejects anything mpq cannot parse and
// zero denominators.
inline Rat parse_rat(const std::string& text) {
    Rat q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace votelab
