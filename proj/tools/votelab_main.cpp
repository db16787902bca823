#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "votelab/dist.hpp"
#include "votelab/dodgson.hpp"
#include "votelab/io.hpp"
#include "votelab/lobby_eval.hpp"
#include "votelab/rng.hpp"

using votelab::Rat;
using votelab::rat_string;
using votelab::io::Json;
using votelab::io::real12;

namespace {

struct BoundCheck {
    std::string claim;
    std::string bound;
    std::string observed;
    bool pass = false;
};

struct Output {
    std::string path;  // empty = stdout
    std::string format = "json";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const Output& out, const std::string& command, const std::string& text) {
    std::string path = out.path;
    if (path.empty()) {
        if (const char* dir = std::getenv("VOTELAB_OUT"))
            path = std::string(dir) + "/" + command + "." + out.format;
    }
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << text;
}

Json bounds_json(const std::vector<BoundCheck>& bounds) {
    Json arr = Json::array();
    for (const auto& b : bounds) {
        Json item;
        item["claim"] = b.claim;
        item["bound"] = b.bound;
        item["observed"] = b.observed;
        item["pass"] = b.pass;
        arr.push_back(std::move(item));
    }
    return arr;
}

// Assembles the report, writes it, and returns the process exit code:
// zero exactly when every bound comparison passed.
int emit_report(const Output& out, const std::string& command, Json config,
                Json payload, const std::vector<BoundCheck>& bounds,
                std::chrono::steady_clock::time_point started,
                const std::string& csv = "") {
    bool all_pass = true;
    for (const auto& b : bounds) all_pass = all_pass && b.pass;

    if (out.format == "csv") {
        if (csv.empty())
            throw std::runtime_error("subcommand '" + command + "' has no CSV form");
        write_text(out, command, csv);
        return all_pass ? 0 : 1;
    }

    Json report;
    report["command"] = command;
    report["config"] = std::move(config);
    report["result"] = std::move(payload);
    report["bounds"] = bounds_json(bounds);
    report["all_pass"] = all_pass;
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    write_text(out, command, report.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

Json trace_json(const votelab::lobby::GreedyTrace& trace) {
    Json flips = Json::array();
    for (const auto& f : trace.flips) {
        Json flip;
        flip["k"] = f.index;
        flip["row"] = f.row;
        flip["column"] = f.column;
        flip["cost"] = rat_string(f.cost);
        flip["iteration"] = f.iteration;
        flips.push_back(std::move(flip));
    }
    Json doc;
    doc["flips"] = std::move(flips);
    doc["iteration_sizes"] = trace.iteration_sizes;
    doc["selected_rows"] = trace.selected_rows;
    doc["total_price"] = rat_string(trace.total_price);
    return doc;
}

Json ratio_report_json(const votelab::lobby::RatioReport& r) {
    Json doc;
    doc["initial_deficit"] = r.initial_deficit;
    doc["greedy_price"] = rat_string(r.greedy_price);
    doc["opt_price"] = rat_string(r.opt_price);
    doc["ratio"] = rat_string(r.ratio);
    doc["refined_bound"] = rat_string(r.refined);
    doc["harmonic_bound"] = rat_string(r.harmonic_bound);
    doc["per_entry_ok"] = r.per_entry_ok;
    return doc;
}

votelab::lobby::PriceModel parse_price_model(const std::string& name) {
    if (name == "unit") return votelab::lobby::PriceModel::unit;
    if (name == "uniform-rational") return votelab::lobby::PriceModel::uniform_rational;
    throw CLI::ValidationError("--price-model must be unit or uniform-rational");
}

void warn_cap_override(const std::string& what) {
    std::cerr << "warning: raising the " << what
              << " cap; expect long runtimes or heavy memory use\n";
}

// ---- subcommand bodies ----

int run_lobby_greedy(const Output& out, const std::string& input) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::lobby;
    VoteMatrix instance = votelab::io::parse_lobby_instance(read_file(input));
    NormalizedInstance norm = normalize(instance);
    DeficitVector deficits = deficit_sum(norm);
    GreedyTrace trace = greedy_lobby(norm);
    const std::vector<int> rows = denormalize_solution(norm, trace.selected_rows);
    const bool satisfied = satisfies_target(instance, rows);

    Json config;
    config["input"] = input;
    Json payload;
    payload["voters"] = instance.voters;
    payload["referenda"] = instance.referenda;
    payload["flipped_columns"] = norm.flip_mask;
    payload["deficits"] = deficits.per_column;
    payload["initial_deficit_total"] = deficits.total;
    payload["trace"] = trace_json(trace);
    payload["selected_rows"] = rows;

    std::vector<BoundCheck> bounds;
    bounds.push_back({"bought rows give every referendum its target majority",
                      "true", satisfied ? "true" : "false", satisfied});

    std::ostringstream csv;
    csv << "k,row,column,cost,iteration\n";
    for (const auto& f : trace.flips)
        csv << f.index << ',' << f.row << ',' << f.column << ',' << rat_string(f.cost)
            << ',' << f.iteration << '\n';
    return emit_report(out, "lobby-greedy", config, payload, bounds, started, csv.str());
}

int run_lobby_exact(const Output& out, const std::string& input, int cap_override) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::lobby;
    VoteMatrix instance = votelab::io::parse_lobby_instance(read_file(input));
    NormalizedInstance norm = normalize(instance);
    ExactOptions opts;
    if (cap_override > 0) {
        warn_cap_override("brute-force voter");
        opts.max_voters = cap_override;
    }
    ExactSolution solution = exact_opt(norm, opts);
    const bool satisfied = satisfies_target(instance, solution.rows);

    Json config;
    config["input"] = input;
    config["brute_force_cap"] = opts.max_voters;
    Json payload;
    payload["rows"] = solution.rows;
    payload["opt_price"] = rat_string(solution.opt_price);

    std::vector<BoundCheck> bounds;
    bounds.push_back({"optimal rows give every referendum its target majority",
                      "true", satisfied ? "true" : "false", satisfied});
    return emit_report(out, "lobby-exact", config, payload, bounds, started);
}

int run_lobby_ratio(const Output& out, int m, int n, int trials, uint64_t seed,
                    const std::string& price_model, long price_range, int cap_override) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::lobby;
    ExperimentParams params;
    params.instance.voters = m;
    params.instance.referenda = n;
    params.instance.price_model = parse_price_model(price_model);
    params.instance.price_range = price_range;
    params.trials = trials;
    if (cap_override > 0) warn_cap_override("brute-force voter");
    const int cap = cap_override > 0 ? cap_override : ExactOptions{}.max_voters;
    if (m > cap)
        throw std::runtime_error("lobby-ratio: m exceeds the brute-force cap; "
                                 "pass --cap-override to force it");

    std::vector<RatioReport> reports = ratio_experiment(params, seed);

    long cost_violations = 0, refined_violations = 0, harmonic_violations = 0;
    Rat max_ratio = 0;
    Json trials_json = Json::array();
    std::ostringstream csv;
    csv << "trial,initial_deficit,greedy_price,opt_price,ratio,refined_bound,"
           "harmonic_bound,per_entry_ok\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const RatioReport& r = reports[i];
        if (!r.per_entry_ok) ++cost_violations;
        if (r.initial_deficit > 0) {
            if (r.ratio > r.refined) ++refined_violations;
            if (r.refined > r.harmonic_bound) ++harmonic_violations;
        }
        if (r.ratio > max_ratio) max_ratio = r.ratio;
        trials_json.push_back(ratio_report_json(r));
        csv << i << ',' << r.initial_deficit << ',' << rat_string(r.greedy_price) << ','
            << rat_string(r.opt_price) << ',' << rat_string(r.ratio) << ','
            << rat_string(r.refined) << ',' << rat_string(r.harmonic_bound) << ','
            << (r.per_entry_ok ? 1 : 0) << '\n';
    }

    Json config;
    config["m"] = m;
    config["n"] = n;
    config["trials"] = trials;
    config["seed"] = seed;
    config["price_model"] = price_model;
    config["price_range"] = price_range;
    Json payload;
    payload["trials"] = std::move(trials_json);
    Json aggregate;
    aggregate["max_ratio"] = rat_string(max_ratio);
    aggregate["per_entry_cost_violations"] = cost_violations;
    payload["aggregate"] = std::move(aggregate);

    std::vector<BoundCheck> bounds;
    bounds.push_back({"per-entry cost stays within opt/(D0-k+1) on every trial",
                      "0 violations", std::to_string(cost_violations) + " violations",
                      cost_violations == 0});
    bounds.push_back({"greedy/opt ratio stays within the per-iteration bound",
                      "0 violations", std::to_string(refined_violations) + " violations",
                      refined_violations == 0});
    bounds.push_back({"per-iteration bound stays within the harmonic bound",
                      "0 violations", std::to_string(harmonic_violations) + " violations",
                      harmonic_violations == 0});
    return emit_report(out, "lobby-ratio", config, payload, bounds, started, csv.str());
}

int run_lobby_tight(const Output& out, int n, const std::string& epsilon_text) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::lobby;
    const Rat epsilon = votelab::parse_rat(epsilon_text);
    VoteMatrix instance = tight_example(n, epsilon);
    NormalizedInstance norm = normalize(instance);
    GreedyTrace trace = greedy_lobby(norm);
    ExactOptions opts;
    opts.hint_rows = &trace.selected_rows;
    ExactSolution exact = exact_opt(norm, opts);
    RatioReport report = make_ratio_report(trace, exact);

    const Rat h = harmonic(n);
    Rat opt_expected = 1 + epsilon;
    opt_expected.canonicalize();
    Rat ratio_expected = h / opt_expected;
    ratio_expected.canonicalize();

    Json config;
    config["n"] = n;
    config["epsilon"] = rat_string(epsilon);
    Json payload;
    payload["instance"] = votelab::io::lobby_instance_json(instance);
    payload["trace"] = trace_json(trace);
    payload["opt_rows"] = exact.rows;
    payload["report"] = ratio_report_json(report);

    std::vector<BoundCheck> bounds;
    bounds.push_back({"greedy pays exactly the harmonic number H_n", rat_string(h),
                      rat_string(trace.total_price), trace.total_price == h});
    const bool opt_is_single = exact.rows == std::vector<int>{n};
    bounds.push_back({"optimum buys only the all-zeros voter at price 1+epsilon",
                      rat_string(opt_expected),
                      rat_string(exact.opt_price) + " via rows " + Json(exact.rows).dump(),
                      opt_is_single && exact.opt_price == opt_expected});
    bounds.push_back({"observed ratio equals H_n/(1+epsilon)", rat_string(ratio_expected),
                      rat_string(report.ratio), report.ratio == ratio_expected});

    std::ostringstream csv;
    for (int j = 1; j <= n; ++j) csv << "r" << j << ',';
    csv << "price\n";
    for (int i = 0; i < instance.voters; ++i) {
        for (int j = 0; j < n; ++j) csv << int(instance.entries[i][j]) << ',';
        csv << rat_string(instance.prices[i]) << '\n';
    }
    return emit_report(out, "lobby-tight", config, payload, bounds, started, csv.str());
}

int run_dodgson_score(const Output& out, const std::string& input,
                      const std::string& candidate, long cap_override) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::dodgson;
    Election e = votelab::io::parse_election(read_file(input));
    DodgsonTriple triple{e, votelab::io::candidate_index(e, candidate)};
    ScoreOptions opts;
    if (cap_override > 0) {
        warn_cap_override("deficit state");
        opts.max_states = cap_override;
    }
    const auto verdict = greedy_score(triple);
    const long exact = exact_score(triple, opts);

    Json config;
    config["input"] = input;
    config["candidate"] = candidate;
    Json payload;
    Json rivals = Json::array();
    for (int d = 0; d < e.candidate_count(); ++d) {
        if (d == triple.designated) continue;
        Json rival;
        rival["candidate"] = e.candidates[d];
        rival["deficit"] = deficit_against(triple, d);
        rival["adjacency"] = adjacency_count(triple, d);
        rivals.push_back(std::move(rival));
    }
    payload["rivals"] = std::move(rivals);
    payload["nice"] = is_nice(triple);
    payload["greedy_score"] = verdict.value;
    payload["greedy_flag"] = votelab::flag_string(verdict.flag);
    payload["exact_score"] = exact;

    std::vector<BoundCheck> bounds;
    const bool agrees = !verdict.definite() || verdict.value == exact;
    bounds.push_back({"a definitely-flagged greedy score equals the exact score",
                      "agreement",
                      verdict.definite() ? (agrees ? "agrees" : "disagrees")
                                         : "flagged maybe (vacuous)",
                      agrees});
    return emit_report(out, "dodgson-score", config, payload, bounds, started);
}

int run_dodgson_winner(const Output& out, const std::string& input,
                       const std::string& candidate, long cap_override) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::dodgson;
    Election e = votelab::io::parse_election(read_file(input));
    DodgsonTriple triple{e, votelab::io::candidate_index(e, candidate)};
    ScoreOptions opts;
    if (cap_override > 0) {
        warn_cap_override("deficit state");
        opts.max_states = cap_override;
    }
    const auto verdict = greedy_winner(triple);
    const std::vector<int> winners = dodgson_winners(e, opts);
    const bool is_winner =
        std::find(winners.begin(), winners.end(), triple.designated) != winners.end();

    Json config;
    config["input"] = input;
    config["candidate"] = candidate;
    Json payload;
    payload["greedy_is_winner"] = verdict.value;
    payload["greedy_flag"] = votelab::flag_string(verdict.flag);
    Json winner_labels = Json::array();
    for (int w : winners) winner_labels.push_back(e.candidates[w]);
    payload["exact_winners"] = std::move(winner_labels);

    std::vector<BoundCheck> bounds;
    const bool agrees = !verdict.definite() || verdict.value == is_winner;
    bounds.push_back({"a definite winner verdict matches the exact winner set",
                      "agreement",
                      verdict.definite() ? (agrees ? "agrees" : "disagrees")
                                         : "flagged maybe (vacuous)",
                      agrees});
    return emit_report(out, "dodgson-winner", config, payload, bounds, started);
}

int run_dodgson_freq(const Output& out, int m, int n, int trials, uint64_t seed) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::dodgson;
    NicenessReport r = niceness_trial(m, n, trials, seed);
    const double not_nice_slack = 4.0 * std::sqrt(r.not_nice_bound / trials);
    const double any_maybe_slack = 4.0 * std::sqrt(r.any_maybe_bound / trials);

    Json config;
    config["m"] = m;
    config["n"] = n;
    config["trials"] = trials;
    config["seed"] = seed;
    Json payload;
    payload["not_nice"] = r.not_nice;
    payload["any_maybe"] = r.any_maybe;
    payload["not_nice_fraction"] = real12(r.not_nice_fraction());
    payload["any_maybe_fraction"] = real12(r.any_maybe_fraction());
    payload["not_nice_bound"] = real12(r.not_nice_bound);
    payload["any_maybe_bound"] = real12(r.any_maybe_bound);

    std::vector<BoundCheck> bounds;
    bounds.push_back({"not-nice frequency within the proven bound plus sampling slack",
                      real12(r.not_nice_bound + not_nice_slack),
                      real12(r.not_nice_fraction()),
                      r.not_nice_fraction() <= r.not_nice_bound + not_nice_slack});
    bounds.push_back({"any-maybe frequency within the proven bound plus sampling slack",
                      real12(r.any_maybe_bound + any_maybe_slack),
                      real12(r.any_maybe_fraction()),
                      r.any_maybe_fraction() <= r.any_maybe_bound + any_maybe_slack});

    std::ostringstream csv;
    csv << "candidates,votes,trials,not_nice,any_maybe,not_nice_fraction,"
           "any_maybe_fraction,not_nice_bound,any_maybe_bound\n"
        << m << ',' << n << ',' << trials << ',' << r.not_nice << ',' << r.any_maybe
        << ',' << real12(r.not_nice_fraction()) << ',' << real12(r.any_maybe_fraction())
        << ',' << real12(r.not_nice_bound) << ',' << real12(r.any_maybe_bound) << '\n';
    return emit_report(out, "dodgson-freq", config, payload, bounds, started, csv.str());
}

votelab::dist::PiercedSet fixture_by_name(const std::string& name) {
    if (name == "majority") return votelab::dist::majority_pierced();
    if (name == "first-bit") return votelab::dist::first_bit_pierced();
    if (name == "sat3") return votelab::dist::sat3_pierced();
    throw CLI::ValidationError("--fixture must be majority, first-bit or sat3");
}

int run_dist_junta(const Output& out, int n_max, int exponent, const std::string& fixture) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::dist;
    PiercedSet pierced = fixture_by_name(fixture);
    LengthDistribution junta = junta_from_pierced(pierced, exponent);
    auto heuristic = [&](const std::string& x) { return pierced_heuristic(pierced, x); };

    int sum_failures = 0, dichotomy_failures = 0, balance_failures = 0, error_failures = 0;
    Json lengths = Json::array();
    for (int n = 1; n <= n_max; ++n) {
        Json entry;
        entry["n"] = n;
        const Rat sum = junta.length_sum(n);
        entry["weight_sum"] = rat_string(sum);
        if (sum != 1) ++sum_failures;

        long p_of_n = 1;
        for (int i = 0; i < exponent; ++i) p_of_n *= n;
        p_of_n = std::max<long>(p_of_n, n);
        const bool dichotomy = check_dichotomy(junta, n, p_of_n);
        entry["dichotomy"] = dichotomy;
        if (!dichotomy) ++dichotomy_failures;

        // Balance and the error bound are claims about lengths past the
        // piercing threshold only.
        if (n >= pierced.threshold) {
            pierced.check_piercing(n);
            const bool balance = check_balance(junta, pierced.oracle, n, 3);
            entry["balance"] = balance;
            if (!balance) ++balance_failures;
            if (n <= 6 && exponent == 2) {
                const Rat err = heuristic_error_weight(junta, pierced.oracle, heuristic, n);
                entry["heuristic_error_weight"] = rat_string(err);
                const Rat cap = votelab::pow2_rat(-(long(n) * n - n));
                entry["heuristic_error_cap"] = rat_string(cap);
                if (err > cap) ++error_failures;
            }
        }
        lengths.push_back(std::move(entry));
    }

    Json config;
    config["fixture"] = fixture;
    config["n_max"] = n_max;
    config["exponent"] = exponent;
    config["threshold"] = pierced.threshold;
    Json payload;
    payload["lengths"] = std::move(lengths);

    std::vector<BoundCheck> bounds;
    bounds.push_back({"junta weights sum to exactly 1 at every length", "0 failures",
                      std::to_string(sum_failures) + " failures", sum_failures == 0});
    bounds.push_back({"dichotomy holds with p(n) = n^" + std::to_string(exponent),
                      "0 failures", std::to_string(dichotomy_failures) + " failures",
                      dichotomy_failures == 0});
    bounds.push_back({"balance holds with c = 3 from the piercing threshold on",
                      "0 failures", std::to_string(balance_failures) + " failures",
                      balance_failures == 0});
    if (exponent == 2)
        bounds.push_back({"pierced heuristic error weight within 1/2^(n^2-n)",
                          "0 failures", std::to_string(error_failures) + " failures",
                          error_failures == 0});
    return emit_report(out, "dist-junta", config, payload, bounds, started);
}

int run_dist_uniform(const Output& out, int n_max) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::dist;
    int failures = 0, enum_failures = 0;
    Rat running = 0;
    Json lengths = Json::array();
    for (int n = 1; n <= n_max; ++n) {
        running += uniform_length_mass(n);
        Json entry;
        entry["n"] = n;
        entry["length_mass"] = rat_string(uniform_length_mass(n));
        entry["cumulative"] = rat_string(running);
        entry["expected_cumulative"] = rat_string(uniform_cumulative_mass(n));
        if (running != uniform_cumulative_mass(n)) ++failures;
        if (n <= 12) {
            Rat by_enumeration = 0;
            for_each_string(n, [&](const std::string& x) {
                by_enumeration += uniform_density(x);
            });
            if (by_enumeration != uniform_length_mass(n)) ++enum_failures;
        }
        lengths.push_back(std::move(entry));
    }

    Json config;
    config["n_max"] = n_max;
    Json payload;
    payload["lengths"] = std::move(lengths);

    std::vector<BoundCheck> bounds;
    bounds.push_back({"cumulative mass through n equals n/(n+1) exactly", "0 failures",
                      std::to_string(failures) + " failures", failures == 0});
    bounds.push_back({"enumerated per-length densities match 1/(n(n+1))", "0 failures",
                      std::to_string(enum_failures) + " failures", enum_failures == 0});
    return emit_report(out, "dist-uniform", config, payload, bounds, started);
}

int run_dist_fskc(const Output& out, int n_max, int concentrate) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::dist;

    int wrong_definite = 0, rate_failures = 0;
    Json variants = Json::array();
    for (int variant : {0, concentrate}) {
        BenignScheme scheme = parity_benign_scheme(variant);
        Json rows = Json::array();
        for (int n = 1; n <= n_max; ++n) {
            for_each_string(n, [&](const std::string& x) {
                const auto v = fskc_from_benign(scheme, x);
                if (v.definite() && v.value != parity_of_ones(x)) ++wrong_definite;
            });
            const Rat rate = maybe_rate(
                [&](const std::string& x) { return fskc_from_benign(scheme, x).flag; }, n);
            Rat budget(mpz_class(long(n)) * (n + 1), (mpz_class(n) + 1) * (n + 1) * (n + 1));
            budget.canonicalize();
            if (rate > budget) ++rate_failures;
            Json row;
            row["n"] = n;
            row["maybe_rate"] = rat_string(rate);
            row["budget"] = rat_string(budget);
            rows.push_back(std::move(row));
        }
        Json v;
        v["concentrate_length"] = variant;
        v["lengths"] = std::move(rows);
        variants.push_back(std::move(v));
    }

    Json config;
    config["n_max"] = n_max;
    config["concentrate"] = concentrate;
    Json payload;
    payload["variants"] = std::move(variants);

    std::vector<BoundCheck> bounds;
    bounds.push_back({"no definitely-flagged answer disagrees with the target parity",
                      "0 wrong answers", std::to_string(wrong_definite) + " wrong answers",
                      wrong_definite == 0});
    bounds.push_back({"maybe rate at length n stays within n(n+1)/(n+1)^3", "0 failures",
                      std::to_string(rate_failures) + " failures", rate_failures == 0});
    return emit_report(out, "dist-fskc-demo", config, payload, bounds, started);
}

int run_dist_pad(const Output& out, int max_x, int max_len) {
    const auto started = std::chrono::steady_clock::now();
    using namespace votelab::dist;

    long mismatches = 0;
    int weight_failures = 0;
    Json oracle_reports = Json::array();
    const std::pair<std::string, MembershipOracle> fixtures[] = {
        {"majority", majority_pierced().oracle}, {"sat3", sat3_oracle()}};
    LengthDistribution uniform = uniform_per_length();
    for (const auto& [name, base] : fixtures) {
        MembershipOracle padded = padded_oracle(base);
        for (int len = 0; len <= max_x; ++len)
            for_each_string(len, [&](const std::string& x) {
                if (padded(pad_reduce(x)) != base(x)) ++mismatches;
            });

        Json weights = Json::array();
        for (int length = 2; length <= max_len; ++length) {
            const Rat err =
                heuristic_error_weight(uniform, padded, padded_trivial_heuristic, length);
            Json entry;
            entry["length"] = length;
            entry["error_weight"] = rat_string(err);
            entry["cap"] = rat_string(votelab::make_rat(1, length));
            if (err > votelab::make_rat(1, length)) ++weight_failures;
            weights.push_back(std::move(entry));
        }
        Json report;
        report["oracle"] = name;
        report["trivial_heuristic_error_weights"] = std::move(weights);
        oracle_reports.push_back(std::move(report));
    }

    Json config;
    config["max_x"] = max_x;
    config["max_len"] = max_len;
    Json payload;
    payload["oracles"] = std::move(oracle_reports);

    std::vector<BoundCheck> bounds;
    bounds.push_back({"padded membership matches the base oracle through the reduction",
                      "0 mismatches", std::to_string(mismatches) + " mismatches",
                      mismatches == 0});
    bounds.push_back({"trivial heuristic error weight stays below 1/length", "0 failures",
                      std::to_string(weight_failures) + " failures",
                      weight_failures == 0});
    return emit_report(out, "dist-pad", config, payload, bounds, started);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedy lobbying approximation, Dodgson election heuristics and "
                 "length-distribution checks, each paired with an exact oracle"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--output", out.path,
                   "write the report here (default: stdout, or "
                   "$VOTELAB_OUT/<command>.<format> if set)");
    app.add_option("--format", out.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string input, candidate, epsilon = "1/100";
    std::string price_model = "unit", fixture = "majority";
    int m = 6, n = 4, trials = 100, n_max = 10, exponent = 2;
    int concentrate = 3, max_x = 8, max_len = 12;
    long price_range = 6;
    uint64_t seed = 1;
    int cap_override = 0;

    auto* greedy = app.add_subcommand("lobby-greedy", "run the greedy buyer on an instance")->fallthrough();
    greedy->add_option("--input", input, "instance JSON")->required();

    auto* exact = app.add_subcommand("lobby-exact", "exhaustive optimum for an instance")->fallthrough();
    exact->add_option("--input", input, "instance JSON")->required();
    exact->add_option("--cap-override", cap_override, "raise the brute-force voter cap");

    auto* ratio = app.add_subcommand("lobby-ratio", "greedy/opt ratio experiment")->fallthrough();
    ratio->add_option("--m", m, "voters per instance");
    ratio->add_option("--n", n, "referenda per instance");
    ratio->add_option("--trials", trials, "number of instances");
    ratio->add_option("--seed", seed, "master seed");
    ratio->add_option("--price-model", price_model, "unit or uniform-rational");
    ratio->add_option("--price-range", price_range, "numerator/denominator range");
    ratio->add_option("--cap-override", cap_override, "raise the brute-force voter cap");

    auto* tight = app.add_subcommand("lobby-tight", "the harmonic-ratio worst case")->fallthrough();
    tight->add_option("--n", n, "referenda (>= 2)");
    tight->add_option("--epsilon", epsilon, "price offset, a positive rational");

    auto* score = app.add_subcommand("dodgson-score", "greedy and exact Dodgson score")->fallthrough();
    score->add_option("--input", input, "election JSON")->required();
    score->add_option("--candidate", candidate, "designated candidate label")->required();
    score->add_option("--cap-override", cap_override, "raise the deficit-state cap");

    auto* winner = app.add_subcommand("dodgson-winner", "greedy and exact winner check")->fallthrough();
    winner->add_option("--input", input, "election JSON")->required();
    winner->add_option("--candidate", candidate, "designated candidate label")->required();
    winner->add_option("--cap-override", cap_override, "raise the deficit-state cap");

    auto* freq = app.add_subcommand("dodgson-freq", "niceness frequency experiment")->fallthrough();
    freq->add_option("--m", m, "candidates");
    freq->add_option("--n", n, "votes");
    freq->add_option("--trials", trials, "number of sampled elections");
    freq->add_option("--seed", seed, "master seed");

    auto* junta = app.add_subcommand("dist-junta", "junta construction checks")->fallthrough();
    junta->add_option("--n-max", n_max, "check lengths 1..n_max");
    junta->add_option("--exponent", exponent, "denominator exponent k in 2^(n^k)");
    junta->add_option("--fixture", fixture, "majority, first-bit or sat3");
    junta->add_option("--cap-override", cap_override, "raise the enumeration length cap");

    auto* uniform = app.add_subcommand("dist-uniform", "standard uniform distribution checks")->fallthrough();
    uniform->add_option("--n-max", n_max, "check lengths 1..n_max");

    auto* fskc = app.add_subcommand("dist-fskc-demo", "benign-scheme wrapper demo")->fallthrough();
    fskc->add_option("--n-max", n_max, "exhaustive lengths 1..n_max");
    fskc->add_option("--concentrate", concentrate,
                     "length hoarding the second variant's '?' budget");

    auto* pad = app.add_subcommand("dist-pad", "padding reduction checks")->fallthrough();
    pad->add_option("--max-x", max_x, "check pad_reduce on all x up to this length");
    pad->add_option("--max-len", max_len, "error weights for padded lengths up to this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cap_override > 0 && junta->parsed()) {
            warn_cap_override("enumeration length");
            votelab::dist::set_enumeration_cap(cap_override);
        }
        if (greedy->parsed()) return run_lobby_greedy(out, input);
        if (exact->parsed()) return run_lobby_exact(out, input, cap_override);
        if (ratio->parsed())
            return run_lobby_ratio(out, m, n, trials, seed, price_model, price_range,
                                   cap_override);
        if (tight->parsed()) return run_lobby_tight(out, n, epsilon);
        if (score->parsed()) return run_dodgson_score(out, input, candidate, cap_override);
        if (winner->parsed()) return run_dodgson_winner(out, input, candidate, cap_override);
        if (freq->parsed()) return run_dodgson_freq(out, m, n, trials, seed);
        if (junta->parsed()) return run_dist_junta(out, n_max, exponent, fixture);
        if (uniform->parsed()) return run_dist_uniform(out, n_max);
        if (fskc->parsed()) return run_dist_fskc(out, n_max, concentrate);
        if (pad->parsed()) return run_dist_pad(out, max_x, max_len);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
