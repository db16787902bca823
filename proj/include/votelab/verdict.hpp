#pragma once

#include <string>

namespace votelab {

// Carrier of self-knowing correctness: a "definitely" answer is a promise
// that the value is exact; a "maybe" answer promises nothing.
enum class Flag { definitely, maybe };

template <class T>
struct Verdict {
    T value{};
    Flag flag = Flag::maybe;

    bool definite() const { return flag == Flag::definitely; }
};

inline std::string flag_string(Flag f) {
    return f == Flag::definitely ? "definitely" : "maybe";
}

}  // namespace votelab
