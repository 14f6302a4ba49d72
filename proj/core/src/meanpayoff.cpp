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

#include "ivg/meanpayoff.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "ivg/error.hpp"

namespace ivg {

const char* to_string(Comparison c)
{
    switch (c) {
    case Comparison::GE: return ">=";
    case Comparison::GT: return ">";
    case Comparison::LE: return "<=";
    case Comparison::LT: return "<";
    }
    return "?";
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::TooLarge, "rescaled weight overflows");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::TooLarge, "rescaled weight overflows");
    return r;
}

struct EnergyResult {
    VertexSet win;
    PositionalStrategy strategy;
};

// Small energy progress measure. `player` wants every prefix sum of `w` to
// stay above some finite credit; it wins exactly where the measure is finite.
EnergyResult solve_energy(const GameGraph& g, const std::vector<std::int64_t>& w, Player player)
{
    constexpr std::int64_t kTop = std::numeric_limits<std::int64_t>::max();
    const std::size_t n = g.num_vertices();

    std::int64_t worst = 0;
    for (std::int64_t x : w) worst = std::max(worst, -x);
    const std::int64_t cap = checked_mul(static_cast<std::int64_t>(n), worst);

    auto lift = [&](EdgeId e, const std::vector<std::int64_t>& f) {
        const std::int64_t fu = f[g.edge(e).dst];
        if (fu == kTop) return kTop;
        const std::int64_t need = std::max<std::int64_t>(0, fu - w[e]);
        return need > cap ? kTop : need;
    };
    auto best = [&](Vertex v, const std::vector<std::int64_t>& f) {
        const bool mine = g.owner(v) == player;
        std::int64_t r = mine ? kTop : 0;
        for (EdgeId e : g.out_edges(v)) {
            const std::int64_t x = lift(e, f);
            r = mine ? std::min(r, x) : std::max(r, x);
        }
        return r;
    };

    std::vector<std::int64_t> f(n, 0);
    std::vector<char> queued(n, 1);
    std::deque<Vertex> work;
    for (Vertex v = 0; v < n; ++v) work.push_back(v);
    while (!work.empty()) {
        const Vertex v = work.front();
        work.pop_front();
        queued[v] = 0;
        const std::int64_t x = best(v, f);
        if (x <= f[v]) continue;
        f[v] = x;
        for (EdgeId e : g.in_edges(v)) {
            const Vertex s = g.edge(e).src;
            if (!queued[s] && f[s] != kTop) {
                queued[s] = 1;
                work.push_back(s);
            }
        }
    }

    EnergyResult r{VertexSet(n), PositionalStrategy(n)};
    for (Vertex v = 0; v < n; ++v) {
        if (f[v] == kTop) continue;
        r.win.insert(v);
        if (g.owner(v) != player) continue;
        for (EdgeId e : g.out_edges(v)) {
            if (lift(e, f) <= f[v]) {
                r.strategy.set(v, e);
                break;
            }
        }
    }
    return r;
}

// Weights (den * w - num) for "average >= num/den", (num - den * w) for "<=".
std::vector<std::int64_t> shifted(const GameGraph& g, std::int64_t num, std::int64_t den, bool at_least)
{
    std::vector<std::int64_t> out(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const std::int64_t scaled = checked_mul(den, g.edge(e).weight);
        out[e] = at_least ? checked_add(scaled, -num) : checked_add(num, -scaled);
    }
    return out;
}

// A bound "average >= num/den" (at_least) or "<=" for one player.
struct Bound {
    std::int64_t num;
    std::int64_t den;
    bool at_least;
};

} // namespace

Regions mp_threshold(const GameGraph& g, const ThresholdQuery& q)
{
    const std::size_t n = g.num_vertices();
    const std::int64_t p = to_int64(q.threshold.numerator());
    const std::int64_t d = to_int64(q.threshold.denominator());
    const std::int64_t vn = static_cast<std::int64_t>(n);
    const std::int64_t pn = checked_mul(p, vn);
    const std::int64_t dn = checked_mul(d, vn);

    // Mean-payoff values have denominators at most n, so a strict bound is a
    // weak one shifted by 1/(d n), and each player's goal is a weak bound.
    Bound eve{}, adam{};
    switch (q.cmp) {
    case Comparison::GE:
        eve = {p, d, true};
        adam = {checked_add(pn, -1), dn, false};
        break;
    case Comparison::GT:
        eve = {checked_add(pn, 1), dn, true};
        adam = {p, d, false};
        break;
    case Comparison::LE:
        eve = {p, d, false};
        adam = {checked_add(pn, 1), dn, true};
        break;
    case Comparison::LT:
        eve = {checked_add(pn, -1), dn, false};
        adam = {p, d, true};
        break;
    }

    EnergyResult re = solve_energy(g, shifted(g, eve.num, eve.den, eve.at_least), Player::Eve);
    EnergyResult ra = solve_energy(g, shifted(g, adam.num, adam.den, adam.at_least), Player::Adam);
    if (re.win.size() + ra.win.size() != n || !(re.win & ra.win).empty())
        throw std::logic_error("mean-payoff threshold regions are not complementary");

    Regions r(n);
    r.eve = std::move(re.win);
    r.adam = std::move(ra.win);
    r.eve_strategy = std::move(re.strategy);
    r.adam_strategy = std::move(ra.strategy);
    return r;
}

namespace {

// Restricts a region computed on a subgame back to the root graph.
void lift_into(VertexSet& dst, const VertexSet& src, const std::vector<Vertex>& to_root)
{
    for (Vertex v = 0; v < src.universe(); ++v)
        if (src.contains(v)) dst.insert(to_root[v]);
}

Regions all_to(const GameGraph& g, Player p)
{
    Regions r(g.num_vertices());
    (p == Player::Eve ? r.eve : r.adam) = VertexSet(g.num_vertices(), true);
    return r;
}

} // namespace

Regions solve_mp_interval(const GameGraph& g, const IntervalUnion& i)
{
    const std::size_t n = g.num_vertices();
    if (i.empty()) return all_to(g, Player::Adam);
    if (i.left_unbounded()) {
        Regions dual = solve_mp_interval(g.with_swapped_players(), i.complement());
        Regions r(n);
        r.eve = std::move(dual.adam);
        r.adam = std::move(dual.eve);
        return r;
    }

    const Rational a = i.infimum().value();
    const ThresholdQuery below{a, i.infimum_attained() ? Comparison::GE : Comparison::GT};
    const IntervalUnion extended = i.unite(IntervalUnion({Interval::at_most(a)}));

    Regions r(n);
    GameGraph h = g;
    std::vector<Vertex> to_root(n);
    for (Vertex v = 0; v < n; ++v) to_root[v] = v;

    for (;;) {
        VertexSet lost = mp_threshold(h, below).adam;
        lost |= solve_mp_interval(h, extended).adam;
        if (lost.empty()) {
            lift_into(r.eve, VertexSet(h.num_vertices(), true), to_root);
            break;
        }
        // Close under Adam's attractor so that the rest is a subgame again.
        lost = attractor(h, lost, Player::Adam);
        lift_into(r.adam, lost, to_root);
        if (lost.size() == h.num_vertices()) break;

        Subgame sub = subgame(h, lost);
        for (auto& v : sub.to_parent) v = to_root[v];
        to_root = std::move(sub.to_parent);
        h = std::move(sub.graph);
    }
    r.check_partition();
    return r;
}

Regions solve_mp_single(const GameGraph& g, const Interval& i)
{
    const std::size_t n = g.num_vertices();
    Regions r(n);
    PositionalStrategy adam(n);

    GameGraph h = g;
    std::vector<Vertex> to_root(n);
    std::vector<EdgeId> edge_to_root(g.num_edges());
    for (Vertex v = 0; v < n; ++v) to_root[v] = v;
    for (EdgeId e = 0; e < g.num_edges(); ++e) edge_to_root[e] = e;

    auto record = [&](const Regions& part, const std::vector<Vertex>& vmap, const std::vector<EdgeId>& emap) {
        for (Vertex v = 0; v < part.adam.universe(); ++v) {
            if (!part.adam.contains(v)) continue;
            r.adam.insert(vmap[v]);
            if (part.adam_strategy->defined(v)) adam.set(vmap[v], emap[part.adam_strategy->at(v)]);
        }
    };

    for (;;) {
        const std::size_t size = h.num_vertices();
        VertexSet removed(size);
        if (i.lo().is_finite()) {
            const Regions a = mp_threshold(h, {i.lo().value(), i.lo_open() ? Comparison::GT : Comparison::GE});
            record(a, to_root, edge_to_root);
            removed |= a.adam;
        }
        if (i.hi().is_finite() && removed.size() < size) {
            // The complement of an Adam region is a trap for Adam, hence a subgame.
            Subgame rest = subgame(h, removed);
            const Regions b = mp_threshold(rest.graph, {i.hi().value(), i.hi_open() ? Comparison::LT : Comparison::LE});
            std::vector<Vertex> vmap(rest.to_parent.size());
            std::vector<EdgeId> emap(rest.edge_to_parent.size());
            for (Vertex v = 0; v < vmap.size(); ++v) vmap[v] = to_root[rest.to_parent[v]];
            for (EdgeId e = 0; e < emap.size(); ++e) emap[e] = edge_to_root[rest.edge_to_parent[e]];
            record(b, vmap, emap);
            removed |= rest.lift(b.adam, size);
        }
        if (removed.empty()) {
            lift_into(r.eve, VertexSet(size, true), to_root);
            break;
        }
        if (removed.size() == size) break;

        Subgame sub = subgame(h, removed);
        for (auto& v : sub.to_parent) v = to_root[v];
        for (auto& e : sub.edge_to_parent) e = edge_to_root[e];
        to_root = std::move(sub.to_parent);
        edge_to_root = std::move(sub.edge_to_parent);
        h = std::move(sub.graph);
    }
    r.check_partition();
    r.adam_strategy = std::move(adam);
    return r;
}

IntervalGame parity_to_mp(const ParityGame& p)
{
    const GameGraph& g = p.graph;
    const std::size_t n = g.num_vertices();
    for (Vertex v = 0; v < n; ++v)
        if (p.priority[v] > n)
            throw Error(ErrorKind::PriorityOutOfRange,
                        "priority " + std::to_string(p.priority[v]) + " of '" + g.name(v) + "' exceeds " +
                            std::to_string(n));

    std::vector<Player> owners = g.owners();
    owners.reserve(4 * n);
    for (Vertex v = 0; v < n; ++v) {
        const Player gadget = p.priority[v] % 2 == 0 ? Player::Eve : Player::Adam;
        owners.insert(owners.end(), 3, gadget);
    }
    auto zero = [n](Vertex v) { return static_cast<Vertex>(n + 3 * v); };

    std::vector<Edge> edges;
    edges.reserve(g.num_edges() + 6 * n);
    for (const Edge& e : g.edges()) edges.push_back({e.src, zero(e.dst), static_cast<Weight>(p.priority[e.src])});
    for (Vertex v = 0; v < n; ++v) {
        const Weight w = p.priority[v];
        const Vertex v0 = zero(v), plus = v0 + 1, minus = v0 + 2;
        edges.push_back({v0, plus, w});
        edges.push_back({v0, minus, w});
        edges.push_back({plus, v, w});
        edges.push_back({minus, v, w});
        edges.push_back({plus, plus, w + 1});
        edges.push_back({minus, minus, w - 1});
    }

    std::vector<std::string> names;
    if (g.has_names()) {
        names = g.names();
        for (Vertex v = 0; v < n; ++v) {
            names.push_back(g.name(v) + "^0");
            names.push_back(g.name(v) + "^+");
            names.push_back(g.name(v) + "^-");
        }
    }

    const std::int64_t top = n % 2 == 0 ? static_cast<std::int64_t>(n) : static_cast<std::int64_t>(n) + 1;
    std::vector<Interval> pieces;
    for (std::int64_t k = 0; k <= top; k += 2) pieces.emplace_back(Rational(k), false, Rational(k + 1), true);

    return {GameGraph(std::move(owners), std::move(edges), g.initial(), std::move(names)),
            IntervalUnion(std::move(pieces))};
}

} // namespace ivg
