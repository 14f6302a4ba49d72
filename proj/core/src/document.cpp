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

#include "ivg/document.hpp"

#include <limits>
#include <unordered_map>

#include <json.hpp>

#include "ivg/error.hpp"

namespace ivg {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedDocument, what); }

const json& field(const json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) malformed(std::string("missing field '") + key + "'");
    return *it;
}

std::string string_field(const json& obj, const char* key)
{
    const json& v = field(obj, key);
    if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

bool bool_field(const json& obj, const char* key)
{
    const json& v = field(obj, key);
    if (!v.is_boolean()) malformed(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

std::int64_t integer(const json& v, const char* what)
{
    if (v.is_number_integer()) return v.get<std::int64_t>();
    malformed(std::string(what) + " must be an integer");
}

ExtendedRational extended(const json& v)
{
    if (v.is_number_integer()) return ExtendedRational(v.get<std::int64_t>());
    if (!v.is_string()) malformed("interval endpoints must be rational strings");
    return ExtendedRational::parse(v.get<std::string>());
}

Player owner_of(const json& v)
{
    const std::string s = string_field(v, "owner");
    if (s == "eve") return Player::Eve;
    if (s == "adam") return Player::Adam;
    malformed("owner must be \"eve\" or \"adam\", got \"" + s + "\"");
}

json parse_text(std::string_view text)
{
    try {
        json doc = json::parse(text.begin(), text.end());
        if (!doc.is_object()) malformed("document must be an object");
        return doc;
    } catch (const json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

struct Skeleton {
    std::vector<std::string> names;
    std::vector<Player> owners;
    std::vector<Priority> priorities;
    std::unordered_map<std::string, Vertex> index;
    Vertex initial = 0;
};

Vertex lookup(const Skeleton& s, const json& obj, const char* key)
{
    const std::string id = string_field(obj, key);
    auto it = s.index.find(id);
    if (it == s.index.end()) throw Error(ErrorKind::UnknownVertexReference, "unknown vertex '" + id + "'");
    return it->second;
}

Skeleton read_vertices(const json& doc, bool priorities)
{
    const json& vs = field(doc, "vertices");
    if (!vs.is_array()) malformed("'vertices' must be a list");
    Skeleton s;
    for (const json& v : vs) {
        if (!v.is_object()) malformed("vertex entries must be objects");
        std::string id = string_field(v, "id");
        if (!s.index.emplace(id, static_cast<Vertex>(s.names.size())).second)
            malformed("duplicate vertex id '" + id + "'");
        s.names.push_back(std::move(id));
        s.owners.push_back(owner_of(v));
        if (priorities) {
            const std::int64_t q = integer(field(v, "priority"), "priority");
            if (q < 0 || q > std::numeric_limits<std::int32_t>::max()) malformed("priority out of range");
            s.priorities.push_back(static_cast<Priority>(q));
        }
    }
    if (s.names.empty()) malformed("game has no vertices");
    const json& init = field(doc, "initial");
    if (!init.is_string()) malformed("'initial' must be a vertex id");
    auto it = s.index.find(init.get<std::string>());
    if (it == s.index.end())
        throw Error(ErrorKind::UnknownVertexReference, "initial vertex '" + init.get<std::string>() + "' is not listed");
    s.initial = it->second;
    return s;
}

std::vector<Edge> read_edges(const json& list, const Skeleton& s, bool weighted)
{
    if (!list.is_array()) malformed("edge lists must be lists");
    std::vector<Edge> edges;
    for (const json& e : list) {
        if (!e.is_object()) malformed("edge entries must be objects");
        const Vertex src = lookup(s, e, "src");
        const Vertex dst = lookup(s, e, "dst");
        const Weight w = weighted ? integer(field(e, "weight"), "weight") : 0;
        edges.push_back({src, dst, w});
    }
    return edges;
}

IntervalUnion read_intervals(const json& list)
{
    if (!list.is_array()) malformed("'intervals' must be a list");
    std::vector<Interval> pieces;
    for (const json& i : list) {
        if (!i.is_object()) malformed("interval entries must be objects");
        pieces.emplace_back(extended(field(i, "lo")), bool_field(i, "lo_open"), extended(field(i, "hi")),
                            bool_field(i, "hi_open"));
    }
    return IntervalUnion(std::move(pieces));
}

ordered_json vertex_list(const GameGraph& g, const std::vector<Priority>* priorities)
{
    ordered_json out = ordered_json::array();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        ordered_json o;
        o["id"] = g.name(v);
        o["owner"] = to_string(g.owner(v));
        if (priorities) o["priority"] = (*priorities)[v];
        out.push_back(std::move(o));
    }
    return out;
}

ordered_json edge_entry(const GameGraph& g, const Edge& e, bool weighted)
{
    ordered_json o;
    o["src"] = g.name(e.src);
    o["dst"] = g.name(e.dst);
    if (weighted) o["weight"] = e.weight;
    return o;
}

ordered_json interval_list(const IntervalUnion& u)
{
    ordered_json out = ordered_json::array();
    for (const Interval& i : u.intervals()) {
        ordered_json o;
        o["lo"] = i.lo().str();
        o["hi"] = i.hi().str();
        o["lo_open"] = i.lo_open();
        o["hi_open"] = i.hi_open();
        out.push_back(std::move(o));
    }
    return out;
}

std::string optional_comment(const json& doc)
{
    auto it = doc.find("comment");
    if (it == doc.end()) return {};
    if (!it->is_string()) malformed("'comment' must be a string");
    return it->get<std::string>();
}

} // namespace

ParityGame GameDocument::parity_game() const
{
    if (!is_parity()) throw Error(ErrorKind::IncompatibleReduction, "not a parity document");
    return ParityGame(graph, priorities);
}

GameDocument parse_game(std::string_view text)
{
    const json doc = parse_text(text);
    const json& obj = field(doc, "objective");
    if (!obj.is_object()) malformed("'objective' must be an object");
    const std::string payoff_name = string_field(obj, "payoff");
    const auto payoff = payoff_from_string(payoff_name);
    if (!payoff) malformed("unknown payoff '" + payoff_name + "'");
    const bool parity = *payoff == Payoff::Parity;

    Skeleton s = read_vertices(doc, parity);
    GameDocument out;
    out.graph = GameGraph(std::move(s.owners), read_edges(field(doc, "edges"), s, !parity), s.initial, std::move(s.names));
    out.priorities = std::move(s.priorities);
    out.objective.payoff = *payoff;
    if (auto it = obj.find("lambda"); it != obj.end()) {
        if (!it->is_string()) malformed("'lambda' must be a rational string");
        out.objective.lambda = Rational::parse(it->get<std::string>());
    }
    if (!parity || obj.contains("intervals")) out.objective.intervals = read_intervals(field(obj, "intervals"));
    out.objective.validate();
    out.comment = optional_comment(doc);
    return out;
}

std::string serialize_game(const GameDocument& doc)
{
    const GameGraph& g = doc.graph;
    ordered_json out;
    out["vertices"] = vertex_list(g, doc.is_parity() ? &doc.priorities : nullptr);
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back(edge_entry(g, e, !doc.is_parity()));
    out["edges"] = std::move(edges);
    out["initial"] = g.name(g.initial());
    ordered_json obj;
    obj["payoff"] = to_string(doc.objective.payoff);
    if (doc.objective.lambda) obj["lambda"] = doc.objective.lambda->str();
    obj["intervals"] = interval_list(doc.objective.intervals);
    out["objective"] = std::move(obj);
    if (!doc.comment.empty()) out["comment"] = doc.comment;
    return out.dump(2) + "\n";
}

GameDocument make_document(GameGraph g, Objective o, std::string comment)
{
    o.validate();
    GameDocument d;
    d.graph = std::move(g);
    d.objective = std::move(o);
    d.comment = std::move(comment);
    return d;
}

GameDocument make_parity_document(const ParityGame& p, std::string comment)
{
    GameDocument d;
    d.graph = p.graph;
    d.objective.payoff = Payoff::Parity;
    d.priorities = p.priority;
    d.comment = std::move(comment);
    return d;
}

OneCounterParityGame parse_ocpg(std::string_view text)
{
    const json doc = parse_text(text);
    const json& obj = field(doc, "objective");
    if (!obj.is_object() || string_field(obj, "payoff") != "ocpg-parity")
        malformed("not a one-counter parity document");

    Skeleton s = read_vertices(doc, true);
    std::vector<Edge> edges = read_edges(field(doc, "edges"), s, true);
    std::vector<char> zero(edges.size(), 0);
    for (const Edge& e : read_edges(field(doc, "zero_edges"), s, false)) {
        edges.push_back(e);
        zero.push_back(1);
    }
    OneCounterParityGame out;
    if (auto it = doc.find("entries"); it != doc.end()) {
        if (!it->is_array()) malformed("'entries' must be a list");
        for (const json& id : *it) {
            if (!id.is_string() || !s.index.count(id.get<std::string>()))
                throw Error(ErrorKind::UnknownVertexReference, "unknown entry vertex");
            out.entry.push_back(s.index.at(id.get<std::string>()));
        }
    }
    out.graph = GameGraph(std::move(s.owners), std::move(edges), s.initial, std::move(s.names));
    out.zero_test = std::move(zero);
    out.priority = std::move(s.priorities);
    out.validate();
    return out;
}

std::string serialize_ocpg(const OneCounterParityGame& game, std::string_view comment)
{
    const GameGraph& g = game.graph;
    ordered_json out;
    out["vertices"] = vertex_list(g, &game.priority);
    ordered_json edges = ordered_json::array(), zero = ordered_json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (game.zero_test[e])
            zero.push_back(edge_entry(g, g.edge(e), false));
        else
            edges.push_back(edge_entry(g, g.edge(e), true));
    }
    out["edges"] = std::move(edges);
    out["zero_edges"] = std::move(zero);
    out["initial"] = g.name(g.initial());
    if (!game.entry.empty()) {
        ordered_json entries = ordered_json::array();
        for (Vertex v : game.entry) entries.push_back(g.name(v));
        out["entries"] = std::move(entries);
    }
    ordered_json obj;
    obj["payoff"] = "ocpg-parity";
    out["objective"] = std::move(obj);
    if (!comment.empty()) out["comment"] = std::string(comment);
    return out.dump(2) + "\n";
}

} // namespace ivg
