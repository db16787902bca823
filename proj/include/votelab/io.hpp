#pragma once

#include <json.hpp>

#include <string>

#include "votelab/dodgson.hpp"
#include "votelab/lobby.hpp"

namespace votelab::io {

using Json = nlohmann::ordered_json;

// {"matrix": [[0,1],...], "prices": ["1","1/3",...], "target": [1,...]}
// Prices parse as exact rationals; dimensions, binary entries and price
// signs are each rejected with their own diagnostic.
lobby::VoteMatrix parse_lobby_instance(const std::string& text);
Json lobby_instance_json(const lobby::VoteMatrix& instance);

// {"candidates": ["a","b"], "votes": [["a","b"],["b","a"]]},
// each vote most-preferred first.
dodgson::Election parse_election(const std::string& text);
Json election_json(const dodgson::Election& e);

int candidate_index(const dodgson::Election& e, const std::string& label);

// 12 significant digits; used only for bounds involving e and ln.
std::string real12(double v);

}  // namespace votelab::io
