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

#ifndef IVG_PARITY_HPP
#define IVG_PARITY_HPP

#include <cstdint>
#include <vector>

#include "ivg/arena.hpp"

namespace ivg {

using Priority = std::uint32_t;

/// Min-parity game: Eve wins a play iff the least priority seen infinitely
/// often is even. The graph's weights are ignored.
struct ParityGame {
    GameGraph graph;
    std::vector<Priority> priority;

    ParityGame() = default;
    /// Throws Error(MalformedDocument) on a priority vector of the wrong size.
    ParityGame(GameGraph g, std::vector<Priority> priorities);

    std::size_t num_vertices() const { return graph.num_vertices(); }
    Priority max_priority() const;
};

/// Least set A containing `target` from which `player` forces a visit to `target`.
VertexSet attractor(const GameGraph& g, const VertexSet& target, Player player);

/// Attractor restricted to the subgame `arena` (a dead-end free vertex subset).
/// When `strategy` is given, records for each attracted vertex of `player`
/// the lowest-index edge that moves closer to the target.
VertexSet attractor(const GameGraph& g, const VertexSet& target, Player player, const VertexSet& arena,
                    PositionalStrategy* strategy);

/// Zielonka's recursive algorithm. Returns exact regions (unknown = {}) and
/// positional winning strategies for both players on their regions.
Regions solve_parity(const ParityGame& p);

} // namespace ivg

#endif
