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

#ifndef IVG_ARENA_HPP
#define IVG_ARENA_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivg/interval.hpp"
#include "ivg/rational.hpp"

namespace ivg {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class Player : std::uint8_t { Eve, Adam };

constexpr Player opponent(Player p) { return p == Player::Eve ? Player::Adam : Player::Eve; }
const char* to_string(Player p);

struct Edge {
    Vertex src;
    Vertex dst;
    Weight weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dense vertex subset of a fixed universe [0, n).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe, bool full = false)
        : bits_(universe, full ? 1 : 0), count_(full ? universe : 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Vertex v) const { return bits_[v] != 0; }
    void insert(Vertex v);
    void erase(Vertex v);

    std::vector<Vertex> members() const;

    VertexSet complement() const;
    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& o) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<char> bits_;
    std::size_t count_ = 0;
};

/// Finite arena with integer edge weights. Immutable after construction;
/// the constructor establishes every structural invariant or throws.
class GameGraph {
public:
    GameGraph() = default;
    /// Throws Error(DeadEndVertex | UnknownVertexReference | MalformedDocument).
    GameGraph(std::vector<Player> owners, std::vector<Edge> edges, Vertex initial,
              std::vector<std::string> names = {});

    std::size_t num_vertices() const { return owners_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    Player owner(Vertex v) const { return owners_[v]; }
    const std::vector<Player>& owners() const { return owners_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const EdgeId> out_edges(Vertex v) const;
    std::span<const EdgeId> in_edges(Vertex v) const;
    Vertex initial() const { return initial_; }

    /// Document identifier, or "v<index>" for unnamed graphs.
    std::string name(Vertex v) const;
    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Vertex> find(std::string_view name) const;

    /// Same graph with Eve and Adam exchanged (G-bar).
    GameGraph with_swapped_players() const;
    /// Same topology with every weight replaced by weights[e].
    GameGraph with_weights(std::span<const Weight> weights) const;
    GameGraph with_initial(Vertex v) const;

    friend bool operator==(const GameGraph& a, const GameGraph& b)
    {
        return a.owners_ == b.owners_ && a.edges_ == b.edges_ && a.initial_ == b.initial_ &&
               a.names_ == b.names_;
    }

private:
    std::vector<Player> owners_;
    std::vector<Edge> edges_;
    Vertex initial_ = 0;
    std::vector<std::string> names_;
    std::vector<std::uint32_t> out_offsets_;
    std::vector<EdgeId> out_list_;
    std::vector<std::uint32_t> in_offsets_;
    std::vector<EdgeId> in_list_;
};

/// Payoff functions. Parity only tags standalone parity documents.
enum class Payoff : std::uint8_t { Liminf, Limsup, MpInf, MpSup, Discounted, TotalInf, TotalSup, Parity };

const char* to_string(Payoff p);
std::optional<Payoff> payoff_from_string(std::string_view s);

struct Objective {
    Payoff payoff = Payoff::Liminf;
    std::optional<Rational> lambda; // present iff payoff == Discounted
    IntervalUnion intervals;

    /// Throws Error(LambdaOutOfRange) when lambda is missing, misplaced or outside (0,1).
    void validate() const;

    friend bool operator==(const Objective&, const Objective&) = default;
};

/// For each vertex, the chosen outgoing edge or kNoEdge.
class PositionalStrategy {
public:
    PositionalStrategy() = default;
    explicit PositionalStrategy(std::size_t n) : choice_(n, kNoEdge) {}

    std::size_t size() const { return choice_.size(); }
    bool defined(Vertex v) const { return choice_[v] != kNoEdge; }
    EdgeId at(Vertex v) const { return choice_[v]; }
    void set(Vertex v, EdgeId e) { choice_[v] = e; }

    friend bool operator==(const PositionalStrategy&, const PositionalStrategy&) = default;

private:
    std::vector<EdgeId> choice_;
};

/// Solved partition of the vertex set, with optional positional witnesses.
struct Regions {
    VertexSet eve;
    VertexSet adam;
    VertexSet unknown;
    std::optional<PositionalStrategy> eve_strategy;
    std::optional<PositionalStrategy> adam_strategy;

    Regions() = default;
    explicit Regions(std::size_t n) : eve(n), adam(n), unknown(n) {}

    /// Throws std::logic_error unless eve, adam, unknown partition the universe.
    void check_partition() const;
    /// "eve", "adam" or "unknown".
    const char* winner(Vertex v) const;
};

/// Reduces sup-payoffs to inf-payoffs by negating weights and intervals.
struct NormalizedGame {
    GameGraph graph;
    Objective objective;
};
NormalizedGame normalize(const GameGraph& g, const Objective& o);

IntervalUnion complement_intervals(const IntervalUnion& i);
bool contains(const IntervalUnion& i, const ExtendedRational& x);

/// Induced subgraph G \ remove, with the index map back to g.
/// The initial vertex is kept if it survives, otherwise the lowest surviving vertex.
struct Subgame {
    GameGraph graph;
    std::vector<Vertex> to_parent;
    std::vector<EdgeId> edge_to_parent;

    /// Lifts a subset of the subgame's vertices to the parent's universe.
    VertexSet lift(const VertexSet& s, std::size_t parent_size) const;
};
/// Throws Error(DeadEndVertex) if the removal strands a vertex, and
/// Error(BadParameters) if nothing would remain.
Subgame subgame(const GameGraph& g, const VertexSet& remove);

Weight max_abs_weight(const GameGraph& g);

/// Output of the reductions that produce a weighted game plus its intervals.
struct IntervalGame {
    GameGraph graph;
    IntervalUnion intervals;
};

} // namespace ivg

#endif
