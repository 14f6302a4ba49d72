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

#include "ivg/arena.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "ivg/error.hpp"

namespace ivg {

const char* to_string(Player p) { return p == Player::Eve ? "eve" : "adam"; }

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members)
{
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

void VertexSet::insert(Vertex v)
{
    if (!bits_[v]) {
        bits_[v] = 1;
        ++count_;
    }
}

void VertexSet::erase(Vertex v)
{
    if (bits_[v]) {
        bits_[v] = 0;
        --count_;
    }
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(count_);
    for (Vertex v = 0; v < bits_.size(); ++v)
        if (bits_[v]) out.push_back(v);
    return out;
}

VertexSet VertexSet::complement() const
{
    VertexSet out(universe());
    for (Vertex v = 0; v < bits_.size(); ++v)
        if (!bits_[v]) out.insert(v);
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o)
{
    for (Vertex v = 0; v < bits_.size(); ++v)
        if (o.bits_[v]) insert(v);
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o)
{
    for (Vertex v = 0; v < bits_.size(); ++v)
        if (!o.bits_[v]) erase(v);
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o)
{
    for (Vertex v = 0; v < bits_.size(); ++v)
        if (o.bits_[v]) erase(v);
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const
{
    for (Vertex v = 0; v < bits_.size(); ++v)
        if (bits_[v] && !o.bits_[v]) return false;
    return true;
}

GameGraph::GameGraph(std::vector<Player> owners, std::vector<Edge> edges, Vertex initial,
                     std::vector<std::string> names)
    : owners_(std::move(owners)), edges_(std::move(edges)), initial_(initial), names_(std::move(names))
{
    const std::size_t n = owners_.size();
    if (n == 0) throw Error(ErrorKind::MalformedDocument, "game graph has no vertices");
    if (!names_.empty()) {
        if (names_.size() != n) throw Error(ErrorKind::MalformedDocument, "vertex name count mismatch");
        std::unordered_set<std::string> seen;
        for (const auto& s : names_)
            if (!seen.insert(s).second) throw Error(ErrorKind::MalformedDocument, "duplicate vertex id '" + s + "'");
    }
    if (initial_ >= n) throw Error(ErrorKind::UnknownVertexReference, "initial vertex is not listed");

    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    for (const auto& e : edges_) {
        if (e.src >= n || e.dst >= n) throw Error(ErrorKind::UnknownVertexReference, "edge endpoint is not listed");
        ++out_offsets_[e.src + 1];
        ++in_offsets_[e.dst + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        out_offsets_[v + 1] += out_offsets_[v];
        in_offsets_[v + 1] += in_offsets_[v];
    }
    out_list_.resize(edges_.size());
    in_list_.resize(edges_.size());
    std::vector<std::uint32_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        out_list_[out_fill[edges_[id].src]++] = id;
        in_list_[in_fill[edges_[id].dst]++] = id;
    }
    for (Vertex v = 0; v < n; ++v)
        if (out_offsets_[v] == out_offsets_[v + 1])
            throw Error(ErrorKind::DeadEndVertex, "vertex '" + name(v) + "' has no outgoing edge");
}

std::span<const EdgeId> GameGraph::out_edges(Vertex v) const
{
    return {out_list_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const EdgeId> GameGraph::in_edges(Vertex v) const
{
    return {in_list_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::string GameGraph::name(Vertex v) const
{
    if (names_.empty()) return "v" + std::to_string(v);
    return names_[v];
}

std::optional<Vertex> GameGraph::find(std::string_view name) const
{
    for (Vertex v = 0; v < num_vertices(); ++v)
        if (this->name(v) == name) return v;
    return std::nullopt;
}

GameGraph GameGraph::with_swapped_players() const
{
    std::vector<Player> owners = owners_;
    for (auto& p : owners) p = opponent(p);
    return GameGraph(std::move(owners), edges_, initial_, names_);
}

GameGraph GameGraph::with_weights(std::span<const Weight> weights) const
{
    if (weights.size() != edges_.size()) throw std::logic_error("weight vector size mismatch");
    std::vector<Edge> edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].weight = weights[i];
    return GameGraph(owners_, std::move(edges), initial_, names_);
}

GameGraph GameGraph::with_initial(Vertex v) const { return GameGraph(owners_, edges_, v, names_); }

const char* to_string(Payoff p)
{
    switch (p) {
    case Payoff::Liminf: return "liminf";
    case Payoff::Limsup: return "limsup";
    case Payoff::MpInf: return "mp-inf";
    case Payoff::MpSup: return "mp-sup";
    case Payoff::Discounted: return "discounted";
    case Payoff::TotalInf: return "total-inf";
    case Payoff::TotalSup: return "total-sup";
    case Payoff::Parity: return "parity";
    }
    return "?";
}

std::optional<Payoff> payoff_from_string(std::string_view s)
{
    for (auto p : {Payoff::Liminf, Payoff::Limsup, Payoff::MpInf, Payoff::MpSup, Payoff::Discounted,
                   Payoff::TotalInf, Payoff::TotalSup, Payoff::Parity})
        if (s == to_string(p)) return p;
    return std::nullopt;
}

void Objective::validate() const
{
    if (payoff == Payoff::Discounted) {
        if (!lambda) throw Error(ErrorKind::LambdaOutOfRange, "discounted objective requires lambda");
        if (lambda->sign() <= 0 || *lambda >= Rational(1))
            throw Error(ErrorKind::LambdaOutOfRange, "lambda " + lambda->str() + " is not in (0,1)");
    } else if (lambda) {
        throw Error(ErrorKind::LambdaOutOfRange, "lambda is only meaningful for discounted objectives");
    }
}

void Regions::check_partition() const
{
    const std::size_t n = eve.universe();
    if (adam.universe() != n || unknown.universe() != n) throw std::logic_error("regions over different universes");
    for (Vertex v = 0; v < n; ++v) {
        const int c = eve.contains(v) + adam.contains(v) + unknown.contains(v);
        if (c != 1) throw std::logic_error("regions do not partition the vertex set at v" + std::to_string(v));
    }
}

const char* Regions::winner(Vertex v) const
{
    if (eve.contains(v)) return "eve";
    if (adam.contains(v)) return "adam";
    return "unknown";
}

NormalizedGame normalize(const GameGraph& g, const Objective& o)
{
    Payoff target;
    switch (o.payoff) {
    case Payoff::Limsup: target = Payoff::Liminf; break;
    case Payoff::MpSup: target = Payoff::MpInf; break;
    case Payoff::TotalSup: target = Payoff::TotalInf; break;
    default: return {g, o};
    }
    std::vector<Weight> negated;
    negated.reserve(g.num_edges());
    for (const auto& e : g.edges()) negated.push_back(-e.weight);
    return {g.with_weights(negated), Objective{target, std::nullopt, o.intervals.negated()}};
}

IntervalUnion complement_intervals(const IntervalUnion& i) { return i.complement(); }

bool contains(const IntervalUnion& i, const ExtendedRational& x) { return i.contains(x); }

VertexSet Subgame::lift(const VertexSet& s, std::size_t parent_size) const
{
    VertexSet out(parent_size);
    for (Vertex v = 0; v < s.universe(); ++v)
        if (s.contains(v)) out.insert(to_parent[v]);
    return out;
}

Subgame subgame(const GameGraph& g, const VertexSet& remove)
{
    const std::size_t n = g.num_vertices();
    if (remove.universe() != n) throw std::logic_error("subgame: removal set over the wrong universe");
    if (remove.size() == n) throw Error(ErrorKind::BadParameters, "subgame would remove every vertex");

    Subgame out;
    std::vector<Vertex> index(n, static_cast<Vertex>(-1));
    for (Vertex v = 0; v < n; ++v) {
        if (remove.contains(v)) continue;
        index[v] = static_cast<Vertex>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<Player> owners;
    std::vector<std::string> names;
    for (Vertex v : out.to_parent) {
        owners.push_back(g.owner(v));
        if (g.has_names()) names.push_back(g.names()[v]);
    }
    std::vector<Edge> edges;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        const Edge& e = g.edge(id);
        if (remove.contains(e.src) || remove.contains(e.dst)) continue;
        edges.push_back({index[e.src], index[e.dst], e.weight});
        out.edge_to_parent.push_back(id);
    }
    const Vertex initial = remove.contains(g.initial()) ? 0 : index[g.initial()];
    out.graph = GameGraph(std::move(owners), std::move(edges), initial, std::move(names));
    return out;
}

Weight max_abs_weight(const GameGraph& g)
{
    Weight w = 0;
    for (const auto& e : g.edges()) w = std::max(w, e.weight < 0 ? -e.weight : e.weight);
    return w;
}

} // namespace ivg
