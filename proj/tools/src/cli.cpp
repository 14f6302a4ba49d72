/*
 * Copyright 2026 The ivg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivg/discounted.hpp"
#include "ivg/liminf.hpp"
#include "ivg/meanpayoff.hpp"
#include "ivg/oracle.hpp"
#include "ivg/parity.hpp"
#include "ivg/random_instances.hpp"
#include "ivg/totalsum.hpp"

namespace ivg::cli {

using ordered_json = nlohmann::ordered_json;

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::SingletonNotSupported:
    case ErrorKind::UnsupportedObjective:
    case ErrorKind::IncompatibleReduction:
    case ErrorKind::NoFiniteEndpoint: return kUnsupported;
    case ErrorKind::TooLarge: return kTooLarge;
    default: return kBadInput;
    }
}

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MalformedDocument, "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string upper(std::string s)
{
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

} // namespace

Verdict solve_document(const GameDocument& doc, const SolveOptions& opts)
{
    if (doc.is_parity())
        throw Error(ErrorKind::UnsupportedObjective, "parity documents are accepted by reduce and check only");
    const NormalizedGame ng = normalize(doc.graph, doc.objective);
    const GameGraph& g = ng.graph;
    const IntervalUnion& i = ng.objective.intervals;

    Verdict v;
    switch (ng.objective.payoff) {
    case Payoff::Liminf:
        v.algorithm = "liminf-to-parity";
        v.regions = solve_liminf(g, i);
        break;
    case Payoff::MpInf:
        v.algorithm = "mp-interval";
        v.regions = solve_mp_interval(g, i);
        break;
    case Payoff::Discounted: {
        DsOptions o;
        o.extra_depth = opts.horizon_slack;
        DsResult r = solve_ds_interval(g, *ng.objective.lambda, i, o);
        v.algorithm = "ds-alternating-search";
        v.regions = std::move(r.regions);
        v.metadata = {{"horizon", static_cast<std::int64_t>(r.horizon)},
                      {"depth", static_cast<std::int64_t>(r.depth)},
                      {"nodes", static_cast<std::int64_t>(r.nodes)}};
        break;
    }
    case Payoff::TotalInf: {
        ThreeValuedRegions r = solve_total_interval(g, i, opts.bound);
        v.algorithm = "total-to-ocpg-bounded";
        v.regions = std::move(r.regions);
        v.metadata = {{"bound", r.bound}, {"configurations", static_cast<std::int64_t>(r.configurations)}};
        break;
    }
    default: throw std::logic_error("normalize left a sup payoff");
    }
    return v;
}

namespace {

ordered_json region_map(const GameGraph& g, const Regions& r)
{
    ordered_json m = ordered_json::object();
    for (Vertex v = 0; v < g.num_vertices(); ++v) m[g.name(v)] = r.winner(v);
    return m;
}

int cmd_solve(const std::string& file, const SolveOptions& opts, bool regions, const std::string& format,
              std::ostream& out)
{
    const GameDocument doc = parse_game(read_file(file));
    const Verdict v = solve_document(doc, opts);
    const GameGraph& g = doc.graph;
    const std::string winner = v.regions.winner(g.initial());
    if (format == "structured") {
        ordered_json j;
        j["winner"] = winner;
        j["initial"] = g.name(g.initial());
        j["payoff"] = to_string(doc.objective.payoff);
        j["algorithm"] = v.algorithm;
        ordered_json meta = ordered_json::object();
        for (const auto& [k, x] : v.metadata) meta[k] = x;
        j["metadata"] = std::move(meta);
        j["regions"] = region_map(g, v.regions);
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << upper(winner) << "\n";
    if (regions)
        for (Vertex u = 0; u < g.num_vertices(); ++u) out << g.name(u) << " " << v.regions.winner(u) << "\n";
    return kOk;
}

int cmd_reduce(const std::string& file, const std::string& to, std::ostream& out)
{
    const GameDocument doc = parse_game(read_file(file));
    auto incompatible = [&]() -> int {
        throw Error(ErrorKind::IncompatibleReduction,
                    std::string("cannot reduce a ") + to_string(doc.objective.payoff) + " game to " + to);
    };
    if (doc.is_parity()) {
        const ParityGame p = doc.parity_game();
        if (to == "liminf") {
            IntervalGame r = parity_to_liminf(p);
            out << serialize_game(make_document(std::move(r.graph), {Payoff::Liminf, std::nullopt, r.intervals},
                                                "liminf game of a parity game"));
            return kOk;
        }
        if (to == "mp") {
            IntervalGame r = parity_to_mp(p);
            out << serialize_game(make_document(std::move(r.graph), {Payoff::MpInf, std::nullopt, r.intervals},
                                                "mean-payoff game of a parity game"));
            return kOk;
        }
        return incompatible();
    }
    const NormalizedGame ng = normalize(doc.graph, doc.objective);
    if (to == "parity" && ng.objective.payoff == Payoff::Liminf) {
        out << serialize_game(make_parity_document(liminf_to_parity(ng.graph, ng.objective.intervals),
                                                   "parity game of a liminf game"));
        return kOk;
    }
    if (to == "ocpg" && ng.objective.payoff == Payoff::TotalInf) {
        out << serialize_ocpg(totalsum_to_ocpg(ng.graph, ng.objective.intervals),
                              "one-counter parity game of a total-sum game");
        return kOk;
    }
    return incompatible();
}

struct GenerateArgs {
    std::string kind;
    std::uint64_t seed = 0;
    std::size_t pairs = 2;
    std::optional<std::uint64_t> target;
    std::uint64_t max_value = 8;
    std::string lambda = "1/2";
    std::size_t vertices = 4;
    std::int64_t credit = 10;
    std::int64_t max_decrement = 4;
    std::uint32_t max_priority = 3;
    std::size_t max_out = 2;
    std::int64_t max_weight = 3;
    std::string payoff = "liminf";
    std::size_t pieces = 2;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out)
{
    gen::Rng rng(a.seed);
    if (a.kind == "subset-sum") {
        SubsetSumInstance s = gen::random_subset_sum(rng, a.pairs, a.max_value);
        if (a.target) s.target = *a.target;
        DsReduction r = subset_sum_to_ds(s, Rational::parse(a.lambda));
        out << serialize_game(
            make_document(std::move(r.graph), {Payoff::Discounted, r.lambda, r.intervals}, std::move(r.comment)));
        return kOk;
    }
    if (a.kind == "countdown") {
        const CountdownInstance cd = gen::random_countdown(rng, a.vertices, a.max_decrement, a.credit);
        IntervalGame r = countdown_to_total(cd);
        out << serialize_game(make_document(std::move(r.graph), {Payoff::TotalInf, std::nullopt, r.intervals},
                                            "countdown game with credit " + std::to_string(a.credit)));
        return kOk;
    }
    if (a.kind == "random-parity") {
        const ParityGame p = gen::random_parity(rng, a.vertices, a.max_priority, a.max_out);
        out << serialize_game(make_parity_document(p, "random parity game, seed " + std::to_string(a.seed)));
        return kOk;
    }
    if (a.kind == "random-arena") {
        const auto payoff = payoff_from_string(a.payoff);
        if (!payoff || *payoff == Payoff::Parity) throw Error(ErrorKind::BadParameters, "unknown payoff '" + a.payoff + "'");
        GameGraph g = gen::random_arena(rng, {a.vertices, 1, a.max_out, a.max_weight});
        gen::IntervalParams ip;
        ip.max_pieces = a.pieces;
        ip.lo = -a.max_weight;
        ip.hi = a.max_weight;
        Objective o{*payoff, std::nullopt, {}};
        if (*payoff == Payoff::Discounted) {
            o.lambda = Rational::parse(a.lambda);
            ip.denominator = 2;
            ip.singletons = false;
        }
        o.intervals = gen::random_intervals(rng, ip);
        out << serialize_game(make_document(std::move(g), std::move(o), "random arena, seed " + std::to_string(a.seed)));
        return kOk;
    }
    throw Error(ErrorKind::BadParameters, "unknown generator '" + a.kind + "'");
}

// Compares solver regions with an oracle; returns the number of mismatches.
std::size_t compare(const GameGraph& g, const Regions& solver, const Regions& reference, bool bound_only,
                    std::ostream& out)
{
    std::size_t bad = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const std::string s = solver.winner(v), o = reference.winner(v);
        const bool ok = bound_only ? (o != "eve" || s == "eve")               // oracle's Eve is a lower bound
                                   : (s == "unknown" || s == o);             // unknown never contradicts
        if (!ok) {
            out << "DISAGREEMENT at " << g.name(v) << ": solver " << s << ", oracle " << o << "\n";
            ++bad;
        }
    }
    return bad;
}

std::size_t check_oracle(const GameDocument& doc, std::ostream& out)
{
    const GameGraph& g0 = doc.graph;
    if (doc.is_parity()) {
        const Regions s = solve_parity(doc.parity_game());
        const Regions o = oracle::brute_force_parity(g0, doc.priorities);
        const std::size_t bad = compare(g0, s, o, false, out);
        if (!bad) out << "oracle: agreement (exact, strategy-pair enumeration)\n";
        return bad;
    }
    const NormalizedGame ng = normalize(g0, doc.objective);
    const GameGraph& g = ng.graph;
    const IntervalUnion& i = ng.objective.intervals;
    std::size_t bad = 0;
    switch (ng.objective.payoff) {
    case Payoff::Liminf:
    case Payoff::MpInf:
    case Payoff::TotalInf: {
        const Verdict v = solve_document(doc);
        const oracle::OracleRegions o = oracle::brute_force_positional(g, ng.objective);
        bad += compare(g, v.regions, o.regions, o.bound_only, out);
        if (ng.objective.payoff == Payoff::MpInf && i.size() == 1) {
            const Regions single = solve_mp_single(g, i.intervals().front());
            const Regions adam = oracle::adam_positional_mp(g, i);
            bad += compare(g, single, adam, false, out);
            bad += compare(g, v.regions, single, false, out);
            if (!bad) out << "oracle: single-interval algorithm agrees with the Adam-positional oracle\n";
        }
        if (!bad)
            out << (o.bound_only ? "oracle: bound-only (positional Eve strategies do not suffice here); no contradiction\n"
                                 : "oracle: agreement (exact, positional enumeration)\n");
        break;
    }
    case Payoff::Discounted: {
        const DsResult r = solve_ds_interval(g, *ng.objective.lambda, i);
        const Regions o = oracle::brute_force_finite_horizon_ds(g, *ng.objective.lambda, i, r.depth);
        bad += compare(g, r.regions, o, false, out);
        if (!bad) out << "oracle: agreement with the unpruned search at depth " << r.depth << "\n";
        break;
    }
    default: throw std::logic_error("normalize left a sup payoff");
    }
    return bad;
}

std::size_t check_stability(const GameDocument& doc, const SolveOptions& opts, std::ostream& out)
{
    if (doc.is_parity()) {
        out << "stability: not applicable to parity documents\n";
        return 0;
    }
    const GameGraph& g = doc.graph;
    std::size_t bad = 0;
    switch (doc.objective.payoff) {
    case Payoff::Discounted: {
        const Verdict base = solve_document(doc, opts);
        for (std::uint64_t k = 1; k <= 5; ++k) {
            SolveOptions deeper = opts;
            deeper.horizon_slack = opts.horizon_slack + k;
            bad += compare(g, solve_document(doc, deeper).regions, base.regions, false, out);
        }
        if (!bad) out << "stability: verdicts unchanged for depths N+1 .. N+5\n";
        break;
    }
    case Payoff::TotalInf:
    case Payoff::TotalSup: {
        const Verdict base = solve_document(doc, opts);
        std::int64_t b = 0;
        for (const auto& [k, x] : base.metadata)
            if (k == "bound") b = x;
        for (std::int64_t extra = 1; extra <= 4 && b > 0; ++extra) {
            SolveOptions wider = opts;
            wider.bound = b + extra;
            const Regions r = solve_document(doc, wider).regions;
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                const std::string s = base.regions.winner(v), t = r.winner(v);
                if (s != "unknown" && t != s) {
                    out << "DISAGREEMENT at " << g.name(v) << ": bound " << b << " says " << s << ", bound "
                        << b + extra << " says " << t << "\n";
                    ++bad;
                }
            }
        }
        if (!bad) out << "stability: no verdict flips for bounds B .. B+4\n";
        break;
    }
    default: out << "stability: not applicable to " << to_string(doc.objective.payoff) << "\n";
    }
    return bad;
}

std::size_t check_claimed(const GameDocument& doc, const std::string& path, std::ostream& out)
{
    nlohmann::json claimed;
    try {
        claimed = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedDocument, std::string("regions file: ") + e.what());
    }
    if (!claimed.is_object() || !claimed.contains("regions") || !claimed["regions"].is_object())
        throw Error(ErrorKind::MalformedDocument, "regions file needs a 'regions' object");
    const Verdict v = solve_document(doc);
    const GameGraph& g = doc.graph;
    const auto& map = claimed["regions"];
    std::size_t bad = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        const auto it = map.find(g.name(u));
        const std::string c = it != map.end() && it->is_string() ? it->get<std::string>() : "<missing>";
        if (c != v.regions.winner(u)) {
            out << "DISAGREEMENT at " << g.name(u) << ": claimed " << c << ", solver " << v.regions.winner(u) << "\n";
            ++bad;
        }
    }
    if (map.size() != g.num_vertices()) {
        out << "DISAGREEMENT: regions file lists " << map.size() << " vertices, game has " << g.num_vertices() << "\n";
        ++bad;
    }
    if (!bad) out << "claimed regions: agreement\n";
    return bad;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Interval objectives on weighted graph games", "ivg"};
    app.require_subcommand(1);

    std::string file, format = "text", to, suite, claimed;
    bool regions = false;
    SolveOptions opts;
    std::int64_t bound = 0;

    auto* solve = app.add_subcommand("solve", "Decide the winner from the initial vertex");
    solve->add_option("file", file, "Game document")->required();
    solve->add_option("--bound", bound, "Counter clamp for total-sum games")->check(CLI::PositiveNumber);
    solve->add_option("--horizon-slack", opts.horizon_slack, "Extra search depth for discounted games");
    solve->add_flag("--regions", regions, "Print the winner of every vertex");
    solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    auto* reduce = app.add_subcommand("reduce", "Translate a game into another kind");
    reduce->add_option("file", file, "Game document")->required();
    reduce->add_option("--to", to, "Target kind")->required()->check(CLI::IsMember({"parity", "ocpg", "mp", "liminf"}));

    GenerateArgs ga;
    auto* generate = app.add_subcommand("generate", "Emit a generated instance");
    generate->add_option("kind", ga.kind, "subset-sum | countdown | random-parity | random-arena")
        ->required()
        ->check(CLI::IsMember({"subset-sum", "countdown", "random-parity", "random-arena"}));
    generate->add_option("--seed", ga.seed, "Random seed")->required();
    generate->add_option("--pairs", ga.pairs, "subset-sum: number of pairs")->check(CLI::Range(1, 64));
    generate->add_option("--target", ga.target, "subset-sum: target (random if absent)");
    generate->add_option("--max-value", ga.max_value, "subset-sum: largest pair value")->check(CLI::Range(1, 1 << 20));
    generate->add_option("--lambda", ga.lambda, "Discount factor p/q");
    generate->add_option("--vertices", ga.vertices, "Vertex count")->check(CLI::Range(1, 10000));
    generate->add_option("--credit", ga.credit, "countdown: initial credit")->check(CLI::PositiveNumber);
    generate->add_option("--max-decrement", ga.max_decrement, "countdown: largest |weight|")->check(CLI::Range(1, 1000));
    generate->add_option("--max-priority", ga.max_priority, "random-parity: largest priority");
    generate->add_option("--max-out", ga.max_out, "Largest out-degree")->check(CLI::Range(1, 64));
    generate->add_option("--max-weight", ga.max_weight, "random-arena: largest |weight|")->check(CLI::Range(0, 1000000));
    generate->add_option("--payoff", ga.payoff, "random-arena: payoff");
    generate->add_option("--pieces", ga.pieces, "random-arena: most intervals")->check(CLI::Range(0, 16));

    auto* check = app.add_subcommand("check", "Cross-check the solver on one instance");
    check->add_option("file", file, "Game document")->required();
    check->add_option("--suite", suite, "oracle | stability")->check(CLI::IsMember({"oracle", "stability"}));
    check->add_option("--regions", claimed, "Regions file to verify (as printed by solve --format structured)");
    check->add_option("--bound", bound, "Counter clamp for total-sum games")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }
    if (bound > 0) opts.bound = bound;

    try {
        if (solve->parsed()) return cmd_solve(file, opts, regions, format, out);
        if (reduce->parsed()) return cmd_reduce(file, to, out);
        if (generate->parsed()) return cmd_generate(ga, out);
        if (check->parsed()) {
            const GameDocument doc = parse_game(read_file(file));
            if (suite.empty() && claimed.empty()) suite = "oracle";
            std::size_t bad = 0;
            if (suite == "oracle") bad += check_oracle(doc, out);
            if (suite == "stability") bad += check_stability(doc, opts, out);
            if (!claimed.empty()) bad += check_claimed(doc, claimed, out);
            return bad ? kDisagreement : kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}

} // namespace ivg::cli
