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

#include "ivg/liminf.hpp"

#include <set>
#include <stdexcept>

#include "ivg/error.hpp"

namespace ivg {

PriorityMap::PriorityMap(std::vector<IntegerInterval> runs) : runs_(std::move(runs))
{
    for (std::size_t k = 0; k < runs_.size(); ++k) {
        const auto& a = runs_[k];
        if (a.lo && a.hi && *a.lo > *a.hi) throw std::logic_error("empty integer run");
        if (k > 0 && !a.lo) throw std::logic_error("unbounded run after the first");
        if (k + 1 < runs_.size()) {
            const auto& b = runs_[k + 1];
            if (!a.hi || !b.lo || *a.hi + 1 >= *b.lo) throw std::logic_error("integer runs not separated");
        }
    }
}

Priority PriorityMap::omega(std::int64_t n) const
{
    if (runs_.empty()) throw std::logic_error("omega on an empty priority map");
    Priority p = 1;
    for (std::size_t k = 0; k < runs_.size(); ++k) {
        const auto& run = runs_[k];
        if (run.contains(n)) return static_cast<Priority>(2 * (k + 1));
        if (run.hi && *run.hi < n) p = static_cast<Priority>(2 * (k + 1) + 1);
    }
    return p;
}

std::optional<PriorityMap::Preimage> PriorityMap::preimage(Priority i) const
{
    const std::size_t r = runs_.size();
    if (i < 1 || i > 2 * r + 1) return std::nullopt;
    if (i % 2 == 0) {
        const auto& run = runs_[i / 2 - 1];
        return Preimage{run.lo, run.hi};
    }
    if (i == 1) {
        if (!runs_.front().lo) return std::nullopt;
        return Preimage{std::nullopt, *runs_.front().lo - 1};
    }
    const std::size_t below = (i - 1) / 2 - 1; // the run just below this gap
    if (!runs_[below].hi) return std::nullopt;
    const std::int64_t lo = *runs_[below].hi + 1;
    if (below + 1 == r) return Preimage{lo, std::nullopt};
    return Preimage{lo, *runs_[below + 1].lo - 1};
}

IntervalUnion PriorityMap::to_intervals() const
{
    std::vector<Interval> pieces;
    for (const auto& run : runs_) {
        const ExtendedRational lo = run.lo ? ExtendedRational(*run.lo) : ExtendedRational::minus_inf();
        const ExtendedRational hi = run.hi ? ExtendedRational(*run.hi) : ExtendedRational::plus_inf();
        pieces.emplace_back(lo, !run.lo, hi, !run.hi);
    }
    return IntervalUnion(std::move(pieces));
}

PriorityMap integer_points(const IntervalUnion& i)
{
    std::vector<IntegerInterval> runs;
    for (const Interval& piece : i.intervals()) {
        IntegerInterval run;
        if (piece.lo().is_finite()) {
            const Rational& lo = piece.lo().value();
            run.lo = to_int64(piece.lo_open() ? mpz_class(lo.floor() + 1) : lo.ceil());
        }
        if (piece.hi().is_finite()) {
            const Rational& hi = piece.hi().value();
            run.hi = to_int64(piece.hi_open() ? mpz_class(hi.ceil() - 1) : hi.floor());
        }
        if (run.lo && run.hi && *run.lo > *run.hi) continue;
        if (!runs.empty() && runs.back().hi && run.lo && *runs.back().hi + 1 >= *run.lo) {
            runs.back().hi = run.hi;
            continue;
        }
        runs.push_back(run);
    }
    return PriorityMap(std::move(runs));
}

PriorityMap integerize(const IntervalUnion& i)
{
    PriorityMap pm = integer_points(i);
    if (pm.empty()) throw Error(ErrorKind::EmptyObjective, "objective " + i.str() + " contains no integer");
    return pm;
}

ParityGame liminf_to_parity(const GameGraph& g, const IntervalUnion& i)
{
    const PriorityMap pm = integerize(i);
    const std::size_t n = g.num_vertices();
    const std::size_t m = g.num_edges();

    std::vector<Player> owners = g.owners();
    owners.resize(n + m, Player::Eve);
    std::vector<Priority> priority(n, pm.max_priority());
    priority.resize(n + m);
    std::vector<Edge> edges(2 * m);
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& orig = g.edge(e);
        const Vertex mid = static_cast<Vertex>(n + e);
        edges[e] = {orig.src, mid, 0};
        edges[m + e] = {mid, orig.dst, 0};
        priority[mid] = pm.omega(orig.weight);
    }
    return ParityGame(GameGraph(std::move(owners), std::move(edges), g.initial()), std::move(priority));
}

IntervalGame parity_to_liminf(const ParityGame& p)
{
    const GameGraph& g = p.graph;
    std::vector<Weight> weights(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) weights[e] = p.priority[g.edge(e).src];

    std::set<Priority> even;
    for (Priority q : p.priority)
        if (q % 2 == 0) even.insert(q);
    std::vector<Interval> pieces;
    for (Priority q : even) pieces.push_back(Interval::singleton(Rational(static_cast<std::int64_t>(q))));
    return {g.with_weights(weights), IntervalUnion(std::move(pieces))};
}

Regions solve_liminf(const GameGraph& g, const IntervalUnion& i)
{
    const std::size_t n = g.num_vertices();
    Regions out(n);
    PositionalStrategy eve(n), adam(n);

    if (integer_points(i).empty()) {
        out.adam = VertexSet(n, true);
        for (Vertex v = 0; v < n; ++v)
            if (g.owner(v) == Player::Adam) adam.set(v, g.out_edges(v).front());
    } else {
        const ParityGame pg = liminf_to_parity(g, i);
        const Regions pr = solve_parity(pg);
        for (Vertex v = 0; v < n; ++v) {
            if (pr.eve.contains(v)) {
                out.eve.insert(v);
                if (g.owner(v) == Player::Eve) eve.set(v, pr.eve_strategy->at(v));
            } else {
                out.adam.insert(v);
                if (g.owner(v) == Player::Adam) adam.set(v, pr.adam_strategy->at(v));
            }
        }
    }
    out.eve_strategy = std::move(eve);
    out.adam_strategy = std::move(adam);
    return out;
}

} // namespace ivg
