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

#include "ivg/totalsum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "ivg/error.hpp"
#include "ivg/liminf.hpp"

namespace ivg {

void OneCounterParityGame::validate() const
{
    if (zero_test.size() != graph.num_edges())
        throw Error(ErrorKind::MalformedDocument, "zero-test flags do not match the edge count");
    if (priority.size() != graph.num_vertices())
        throw Error(ErrorKind::MalformedDocument, "priority count does not match vertex count");
    for (EdgeId e = 0; e < graph.num_edges(); ++e)
        if (zero_test[e] && graph.edge(e).weight != 0)
            throw Error(ErrorKind::MalformedDocument, "zero-test edges cannot change the counter");
    for (Vertex v : entry)
        if (v >= graph.num_vertices()) throw std::logic_error("entry vertex out of range");
}

OneCounterParityGame totalsum_to_ocpg(const GameGraph& g, const IntervalUnion& i)
{
    const PriorityMap pm = integer_points(i);
    if (pm.empty() || (pm.r() == 1 && !pm.runs()[0].lo && !pm.runs()[0].hi))
        throw Error(ErrorKind::NoFiniteEndpoint, "objective " + i.str() + " has no finite integer endpoint");

    const std::size_t n = g.num_vertices(), m = g.num_edges();
    const Priority copies = pm.max_priority(); // 2r+1
    auto copy = [copies](Vertex v, unsigned b, Priority k) {
        return static_cast<Vertex>((2 * v + b) * copies + (k - 1));
    };
    const Vertex first_edge_vertex = static_cast<Vertex>(2 * n * copies);
    const Vertex zero = static_cast<Vertex>(first_edge_vertex + m), bot = zero + 1, top = zero + 2;
    const std::size_t total = static_cast<std::size_t>(top) + 1;

    std::vector<Player> owners(total, Player::Eve);
    std::vector<Priority> priority(total, copies);
    std::vector<std::string> names(total);
    for (Vertex v = 0; v < n; ++v) {
        for (unsigned b = 0; b < 2; ++b) {
            for (Priority k = 1; k <= copies; ++k) {
                const Vertex c = copy(v, b, k);
                owners[c] = b == 1 ? g.owner(v) : Player::Adam;
                priority[c] = k;
                names[c] = "(" + g.name(v) + "," + std::to_string(b) + "," + std::to_string(k) + ")";
            }
        }
    }
    for (EdgeId e = 0; e < m; ++e) names[first_edge_vertex + e] = "e" + std::to_string(e);
    priority[zero] = copies - 1;
    names[zero] = "#zero";
    names[bot] = "#bot";
    names[top] = "#top";

    std::vector<std::optional<PriorityMap::Preimage>> pre(copies + 1);
    for (Priority k = 1; k <= copies; ++k) pre[k] = pm.preimage(k);

    std::vector<Edge> edges;
    std::vector<char> zero_test;
    auto add = [&](Vertex s, Vertex d, Weight w, bool z = false) {
        edges.push_back({s, d, w});
        zero_test.push_back(z ? 1 : 0);
    };
    for (Priority k = 1; k <= copies; ++k) {
        for (EdgeId e = 0; e < m; ++e) {
            const Edge& edge = g.edge(e);
            add(copy(edge.src, 1, k), first_edge_vertex + e, edge.weight);
        }
    }
    // Eve asserts which copy the counter now lies in; copies that no integer
    // maps to are never entered.
    for (EdgeId e = 0; e < m; ++e)
        for (Priority k = 1; k <= copies; ++k)
            if (pre[k]) add(first_edge_vertex + e, copy(g.edge(e).dst, 0, k), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Priority k = 1; k <= copies; ++k) {
            const Vertex c = copy(v, 0, k);
            if (pre[k] && pre[k]->min) add(c, bot, -*pre[k]->min);
            if (pre[k] && pre[k]->max) add(c, top, -*pre[k]->max);
            add(c, copy(v, 1, k), 0);
        }
    }
    add(bot, bot, -1);
    add(top, top, 1);
    add(zero, zero, 0);
    add(bot, zero, 0, true);
    add(top, zero, 0, true);

    const Priority start = pm.omega(0);
    OneCounterParityGame out;
    out.graph = GameGraph(std::move(owners), std::move(edges), copy(g.initial(), 1, start), std::move(names));
    out.zero_test = std::move(zero_test);
    out.priority = std::move(priority);
    for (Vertex v = 0; v < n; ++v) out.entry.push_back(copy(v, 1, start));
    return out;
}

namespace {

// Configuration graph of the bounded approximation. Slot 0 is LOW (counter
// < -B), slots 1 .. 2B+1 are the counters -B .. B, slot 2B+2 is HIGH.
class ConfigurationGraph {
public:
    ConfigurationGraph(const OneCounterParityGame& p, std::int64_t bound)
        : bound_(bound), slots_(static_cast<std::size_t>(2 * bound + 3))
    {
        const std::size_t n = p.graph.num_vertices();
        const std::size_t configs = n * slots_;
        Priority top = 1;
        for (Priority q : p.priority) top = std::max(top, q);
        resolver_priority_ = top;

        owners_.assign(configs, Player::Eve);
        priority_.assign(configs, 0);
        for (Vertex u = 0; u < n; ++u) {
            for (std::size_t s = 0; s < slots_; ++s) {
                owners_[id(u, s)] = p.graph.owner(u);
                priority_[id(u, s)] = p.priority[u];
            }
        }
        eve_sink_ = add_vertex(Player::Eve, 0);
        adam_sink_ = add_vertex(Player::Eve, 1);
        edges_.push_back({eve_sink_, eve_sink_, 0});
        edges_.push_back({adam_sink_, adam_sink_, 0});

        for (Vertex u = 0; u < n; ++u) {
            for (std::size_t s = 0; s < slots_; ++s) {
                const Vertex from = id(u, s);
                bool moved = false;
                for (EdgeId e : p.graph.out_edges(u)) {
                    const Edge& edge = p.graph.edge(e);
                    if (p.zero_test[e]) {
                        if (s != slot_of(0)) continue;
                        edges_.push_back({from, id(edge.dst, s), 0});
                    } else {
                        edges_.push_back({from, step(edge.dst, s, edge.weight, true), 0});
                        // The owner of a self-loop pointing back toward the range can
                        // repeat it until the counter re-enters; only the landing
                        // residue is left to the resolver.
                        const bool back = (s == 0 && edge.weight > 0) || (s == slots_ - 1 && edge.weight < 0);
                        if (edge.dst == u && back) edges_.push_back({from, step(u, s, edge.weight, false), 0});
                    }
                    moved = true;
                }
                // Stuck: the owner loses.
                if (!moved) edges_.push_back({from, p.graph.owner(u) == Player::Eve ? adam_sink_ : eve_sink_, 0});
            }
        }
    }

    std::size_t size() const { return owners_.size(); }
    std::size_t slot_of(std::int64_t c) const { return static_cast<std::size_t>(c + bound_ + 1); }
    Vertex id(Vertex u, std::size_t s) const { return static_cast<Vertex>(u * slots_ + s); }

    /// The finite parity game with saturated slots resolved by `resolver`.
    ParityGame game(Player resolver) const
    {
        std::vector<Player> owners = owners_;
        for (Vertex r : resolvers_) owners[r] = resolver;
        return ParityGame(GameGraph(std::move(owners), edges_, 0), priority_);
    }

private:
    Vertex add_vertex(Player owner, Priority q)
    {
        owners_.push_back(owner);
        priority_.push_back(q);
        return static_cast<Vertex>(owners_.size() - 1);
    }

    // Target of a counter move by w from slot s into vertex dst.
    Vertex step(Vertex dst, std::size_t s, Weight w, bool may_stay)
    {
        const std::size_t low = 0, high = slots_ - 1;
        if (s != low && s != high) {
            const std::int64_t c = static_cast<std::int64_t>(s) - bound_ - 1 + w;
            if (c > bound_) return id(dst, high);
            if (c < -bound_) return id(dst, low);
            return id(dst, slot_of(c));
        }
        if (s == high && w >= 0) return id(dst, high);
        if (s == low && w <= 0) return id(dst, low);

        // Leaving a saturated slot: the new counter lies in an unbounded range
        // whose slots a resolver vertex chooses from.
        const auto key = std::make_tuple(dst, s == high, w, may_stay);
        if (auto it = resolver_of_.find(key); it != resolver_of_.end()) return it->second;
        const Vertex r = add_vertex(Player::Adam, resolver_priority_);
        resolvers_.push_back(r);
        resolver_of_.emplace(key, r);
        std::int64_t lo, hi; // closed range of concrete counters, clipped
        if (s == high) {
            lo = std::max(-bound_, bound_ + w + 1);
            hi = bound_;
            if (may_stay) edges_.push_back({r, id(dst, high), 0});
            if (bound_ + w + 1 < -bound_) edges_.push_back({r, id(dst, low), 0});
        } else {
            lo = -bound_;
            hi = std::min(bound_, -bound_ + w - 1);
            if (may_stay) edges_.push_back({r, id(dst, low), 0});
            if (-bound_ + w - 1 > bound_) edges_.push_back({r, id(dst, high), 0});
        }
        for (std::int64_t c = lo; c <= hi; ++c) edges_.push_back({r, id(dst, slot_of(c)), 0});
        return r;
    }

    std::int64_t bound_;
    std::size_t slots_;
    Priority resolver_priority_ = 1;
    std::vector<Player> owners_;
    std::vector<Priority> priority_;
    std::vector<Edge> edges_;
    std::vector<Vertex> resolvers_;
    std::map<std::tuple<Vertex, bool, Weight, bool>, Vertex> resolver_of_;
    Vertex eve_sink_ = 0, adam_sink_ = 0;
};

} // namespace

ThreeValuedRegions solve_ocpg_bounded(const OneCounterParityGame& p, std::int64_t bound)
{
    if (bound < 1) throw Error(ErrorKind::BadParameters, "counter bound must be positive");
    p.validate();
    const ConfigurationGraph configs(p, bound);
    // Adam resolves in the run that certifies Eve, and vice versa.
    const Regions pessimistic = solve_parity(configs.game(Player::Adam));
    const Regions optimistic = solve_parity(configs.game(Player::Eve));

    const std::size_t n = p.graph.num_vertices();
    ThreeValuedRegions out;
    out.bound = bound;
    out.configurations = configs.size();
    out.regions = Regions(n);
    for (Vertex u = 0; u < n; ++u) {
        const Vertex c = configs.id(u, configs.slot_of(0));
        const bool eve = pessimistic.eve.contains(c), adam = optimistic.adam.contains(c);
        if (eve && adam) throw std::logic_error("bounded approximations contradict each other");
        (eve ? out.regions.eve : adam ? out.regions.adam : out.regions.unknown).insert(u);
    }
    out.regions.check_partition();
    return out;
}

std::int64_t default_bound(const GameGraph& g, const IntervalUnion& i)
{
    mpz_class widest = 0;
    for (const Interval& piece : i.intervals()) {
        for (const ExtendedRational* end : {&piece.lo(), &piece.hi()})
            if (end->is_finite()) widest = std::max(widest, mpz_class(end->value().abs().ceil()));
    }
    const mpz_class b = widest + mpz_class(static_cast<long>(g.num_vertices())) * mpz_class(static_cast<long>(max_abs_weight(g))) + 2;
    return to_int64(b);
}

ThreeValuedRegions solve_total_interval(const GameGraph& g, const IntervalUnion& i, std::optional<std::int64_t> bound)
{
    const std::size_t n = g.num_vertices();
    const PriorityMap pm = integer_points(i);
    ThreeValuedRegions out;
    out.regions = Regions(n);
    // Total sums are integers or infinite, and infinities count as members of
    // unbounded pieces, so these two cases need no counter at all.
    if (pm.empty()) {
        out.regions.adam = VertexSet(n, true);
        return out;
    }
    if (pm.r() == 1 && !pm.runs()[0].lo && !pm.runs()[0].hi) {
        out.regions.eve = VertexSet(n, true);
        return out;
    }

    const OneCounterParityGame reduced = totalsum_to_ocpg(g, i);
    const ThreeValuedRegions approx = solve_ocpg_bounded(reduced, bound.value_or(default_bound(g, i)));
    out.bound = approx.bound;
    out.configurations = approx.configurations;
    for (Vertex v = 0; v < n; ++v) {
        const Vertex c = reduced.entry[v];
        (approx.regions.eve.contains(c) ? out.regions.eve
                                        : approx.regions.adam.contains(c) ? out.regions.adam : out.regions.unknown)
            .insert(v);
    }
    return out;
}

void CountdownInstance::validate() const
{
    if (credit <= 0) throw Error(ErrorKind::BadParameters, "countdown credit must be positive");
    for (const Edge& e : graph.edges())
        if (e.weight >= 0) throw Error(ErrorKind::BadParameters, "countdown weights must be negative");
}

IntervalGame countdown_to_total(const CountdownInstance& cd)
{
    cd.validate();
    const GameGraph& g = cd.graph;
    const std::size_t n = g.num_vertices();
    const Vertex start = static_cast<Vertex>(n), sink = static_cast<Vertex>(n + 1);

    std::vector<Player> owners = g.owners();
    owners.push_back(Player::Eve);
    owners.push_back(Player::Eve);
    std::vector<Edge> edges = g.edges();
    edges.push_back({start, g.initial(), cd.credit});
    for (Vertex v = 0; v < n; ++v) {
        if (g.owner(v) != Player::Eve) continue;
        edges.push_back({v, sink, 0});
        for (EdgeId e : g.out_edges(v)) edges.push_back({v, sink, g.edge(e).weight});
    }
    edges.push_back({sink, sink, 0});

    std::vector<std::string> names;
    if (g.has_names()) {
        names = g.names();
        names.push_back("v_I");
        names.push_back("v_bot");
    }
    return {GameGraph(std::move(owners), std::move(edges), start, std::move(names)),
            IntervalUnion({Interval::singleton(Rational(0))})};
}

} // namespace ivg
