#include "votelab/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace votelab::io {

namespace {

uint8_t binary_entry(const Json& cell, const char* what) {
    if (!cell.is_number_integer())
        throw std::invalid_argument(std::string(what) + " entries must be integers");
    const long v = cell.get<long>();
    if (v != 0 && v != 1)
        throw std::invalid_argument(std::string(what) + " entry " + std::to_string(v) +
                                    " is not 0 or 1");
    return static_cast<uint8_t>(v);
}

Json parse_document(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return doc;
}

}  // namespace

lobby::VoteMatrix parse_lobby_instance(const std::string& text) {
    const Json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("matrix") || !doc.contains("prices") ||
        !doc.contains("target"))
        throw std::invalid_argument("instance needs \"matrix\", \"prices\" and \"target\"");

    lobby::VoteMatrix v;
    const Json& matrix = doc["matrix"];
    if (!matrix.is_array() || matrix.empty())
        throw std::invalid_argument("\"matrix\" must be a nonempty array of rows");
    v.voters = static_cast<int>(matrix.size());
    for (const Json& row : matrix) {
        if (!row.is_array())
            throw std::invalid_argument("matrix rows must be arrays");
        std::vector<uint8_t> cells;
        for (const Json& cell : row) cells.push_back(binary_entry(cell, "matrix"));
        v.entries.push_back(std::move(cells));
    }
    v.referenda = static_cast<int>(v.entries.front().size());
    for (const auto& row : v.entries)
        if (static_cast<int>(row.size()) != v.referenda)
            throw std::invalid_argument("matrix rows have mismatched lengths");

    const Json& prices = doc["prices"];
    if (!prices.is_array() || static_cast<int>(prices.size()) != v.voters)
        throw std::invalid_argument("\"prices\" must list one price per voter");
    for (const Json& price : prices) {
        if (!price.is_string())
            throw std::invalid_argument("prices must be strings like \"3\" or \"1/3\"");
        Rat q = parse_rat(price.get<std::string>());
        if (q < 0)
            throw std::invalid_argument("negative price " + price.get<std::string>());
        v.prices.push_back(std::move(q));
    }

    const Json& target = doc["target"];
    if (!target.is_array() || static_cast<int>(target.size()) != v.referenda)
        throw std::invalid_argument("\"target\" must list one entry per referendum");
    for (const Json& cell : target) v.target.push_back(binary_entry(cell, "target"));

    v.validate();
    return v;
}

Json lobby_instance_json(const lobby::VoteMatrix& instance) {
    Json doc;
    doc["matrix"] = instance.entries;
    Json prices = Json::array();
    for (const auto& p : instance.prices) prices.push_back(rat_string(p));
    doc["prices"] = std::move(prices);
    doc["target"] = instance.target;
    return doc;
}

dodgson::Election parse_election(const std::string& text) {
    const Json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("candidates") || !doc.contains("votes"))
        throw std::invalid_argument("election needs \"candidates\" and \"votes\"");

    dodgson::Election e;
    const Json& candidates = doc["candidates"];
    if (!candidates.is_array() || candidates.empty())
        throw std::invalid_argument("\"candidates\" must be a nonempty array");
    for (const Json& label : candidates) {
        if (!label.is_string())
            throw std::invalid_argument("candidate labels must be strings");
        e.candidates.push_back(label.get<std::string>());
    }

    const Json& votes = doc["votes"];
    if (!votes.is_array()) throw std::invalid_argument("\"votes\" must be an array");
    for (const Json& vote : votes) {
        if (!vote.is_array())
            throw std::invalid_argument("each vote must be an array of labels");
        std::vector<int> order;
        for (const Json& label : vote) {
            if (!label.is_string())
                throw std::invalid_argument("vote entries must be candidate labels");
            order.push_back(candidate_index(e, label.get<std::string>()));
        }
        e.votes.push_back(std::move(order));
    }

    e.validate();
    return e;
}

Json election_json(const dodgson::Election& e) {
    Json doc;
    doc["candidates"] = e.candidates;
    Json votes = Json::array();
    for (const auto& vote : e.votes) {
        Json order = Json::array();
        for (int c : vote) order.push_back(e.candidates[c]);
        votes.push_back(std::move(order));
    }
    doc["votes"] = std::move(votes);
    return doc;
}

int candidate_index(const dodgson::Election& e, const std::string& label) {
    for (int c = 0; c < e.candidate_count(); ++c)
        if (e.candidates[c] == label) return c;
    throw std::invalid_argument("unknown candidate label '" + label + "'");
}

std::string real12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace votelab::io
