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

#include "ivg/parity.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "ivg/error.hpp"

namespace ivg {

ParityGame::ParityGame(GameGraph g, std::vector<Priority> priorities)
    : graph(std::move(g)), priority(std::move(priorities))
{
    if (priority.size() != graph.num_vertices())
        throw Error(ErrorKind::MalformedDocument, "priority count does not match vertex count");
}

Priority ParityGame::max_priority() const
{
    return priority.empty() ? 0 : *std::max_element(priority.begin(), priority.end());
}

VertexSet attractor(const GameGraph& g, const VertexSet& target, Player player)
{
    return attractor(g, target, player, VertexSet(g.num_vertices(), true), nullptr);
}

VertexSet attractor(const GameGraph& g, const VertexSet& target, Player player, const VertexSet& arena,
                    PositionalStrategy* strategy)
{
    const std::size_t n = g.num_vertices();
    constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);
    VertexSet attracted(n);
    std::vector<std::uint32_t> order(n, kUnseen);
    std::vector<std::uint32_t> remaining(n, 0);
    std::deque<Vertex> queue;
    std::uint32_t clock = 0;

    for (Vertex v = 0; v < n; ++v) {
        if (!arena.contains(v)) continue;
        if (target.contains(v)) {
            attracted.insert(v);
            order[v] = clock;
            queue.push_back(v);
        } else if (g.owner(v) != player) {
            for (EdgeId e : g.out_edges(v))
                if (arena.contains(g.edge(e).dst)) ++remaining[v];
        }
    }
    // Target vertices all share rank 0 so that none of them needs a strategy.
    ++clock;

    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (EdgeId e : g.in_edges(u)) {
            const Vertex s = g.edge(e).src;
            if (!arena.contains(s) || attracted.contains(s)) continue;
            if (g.owner(s) != player && --remaining[s] != 0) continue;
            attracted.insert(s);
            order[s] = clock++;
            queue.push_back(s);
        }
    }

    if (strategy) {
        for (Vertex v = 0; v < n; ++v) {
            if (!attracted.contains(v) || target.contains(v) || g.owner(v) != player) continue;
            for (EdgeId e : g.out_edges(v)) {
                const Vertex d = g.edge(e).dst;
                if (attracted.contains(d) && order[d] < order[v]) {
                    strategy->set(v, e);
                    break;
                }
            }
        }
    }
    return attracted;
}

namespace {

class Zielonka {
public:
    explicit Zielonka(const ParityGame& p)
        : game_(p), g_(p.graph),
          strategy_{PositionalStrategy(g_.num_vertices()), PositionalStrategy(g_.num_vertices())}
    {
    }

    std::array<VertexSet, 2> solve(VertexSet arena)
    {
        const std::size_t n = g_.num_vertices();
        std::array<VertexSet, 2> won{VertexSet(n), VertexSet(n)};
        while (!arena.empty()) {
            Priority lowest = static_cast<Priority>(-1);
            for (Vertex v = 0; v < n; ++v)
                if (arena.contains(v)) lowest = std::min(lowest, game_.priority[v]);
            const int alpha = static_cast<int>(lowest % 2);
            const Player pa = alpha == 0 ? Player::Eve : Player::Adam;

            VertexSet top(n);
            for (Vertex v = 0; v < n; ++v) {
                if (!arena.contains(v) || game_.priority[v] != lowest) continue;
                top.insert(v);
                if (g_.owner(v) == pa) strategy_[alpha].set(v, first_edge_within(v, arena));
            }
            const VertexSet attracted = attractor(g_, top, pa, arena, &strategy_[alpha]);
            auto sub = solve(arena - attracted);

            if (sub[1 - alpha].empty()) {
                won[alpha] |= arena;
                break;
            }
            const VertexSet lost = attractor(g_, sub[1 - alpha], opponent(pa), arena, &strategy_[1 - alpha]);
            won[1 - alpha] |= lost;
            arena -= lost;
        }
        return won;
    }

    PositionalStrategy& strategy(Player p) { return strategy_[p == Player::Eve ? 0 : 1]; }

private:
    EdgeId first_edge_within(Vertex v, const VertexSet& arena) const
    {
        for (EdgeId e : g_.out_edges(v))
            if (arena.contains(g_.edge(e).dst)) return e;
        throw std::logic_error("parity subgame has a dead end at " + g_.name(v));
    }

    const ParityGame& game_;
    const GameGraph& g_;
    std::array<PositionalStrategy, 2> strategy_;
};

} // namespace

Regions solve_parity(const ParityGame& p)
{
    const std::size_t n = p.num_vertices();
    Zielonka solver(p);
    auto won = solver.solve(VertexSet(n, true));

    Regions r(n);
    r.eve = won[0];
    r.adam = won[1];
    r.check_partition();

    PositionalStrategy eve(n), adam(n);
    for (Vertex v = 0; v < n; ++v) {
        if (p.graph.owner(v) == Player::Eve && r.eve.contains(v)) eve.set(v, solver.strategy(Player::Eve).at(v));
        if (p.graph.owner(v) == Player::Adam && r.adam.contains(v)) adam.set(v, solver.strategy(Player::Adam).at(v));
    }
    r.eve_strategy = std::move(eve);
    r.adam_strategy = std::move(adam);
    return r;
}

} // namespace ivg
