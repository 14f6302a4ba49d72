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

#include "ivg/random_instances.hpp"

#include <algorithm>
#include <limits>

#include "ivg/error.hpp"

namespace ivg::gen {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    if (lo > hi) throw Error(ErrorKind::BadParameters, "empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    // rejection sampling keeps the draw unbiased and portable
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

bool coin(Rng& rng, unsigned num, unsigned den) { return uniform(rng, 0, den - 1) < num; }

namespace {

std::vector<std::string> default_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    return names;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi)
{
    return static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

} // namespace

GameGraph random_arena(Rng& rng, const ArenaParams& p)
{
    if (p.vertices == 0 || p.min_out == 0 || p.min_out > p.max_out)
        throw Error(ErrorKind::BadParameters, "arena needs vertices and 1 <= min_out <= max_out");
    std::vector<Player> owners(p.vertices);
    for (auto& o : owners) o = coin(rng) ? Player::Eve : Player::Adam;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < p.vertices; ++v) {
        const std::size_t out = pick(rng, p.min_out, p.max_out);
        for (std::size_t k = 0; k < out; ++k) {
            const Vertex dst = static_cast<Vertex>(pick(rng, 0, p.vertices - 1));
            edges.push_back({v, dst, uniform(rng, -p.max_weight, p.max_weight)});
        }
    }
    return GameGraph(std::move(owners), std::move(edges), 0, default_names(p.vertices));
}

ParityGame random_parity(Rng& rng, std::size_t vertices, std::uint32_t max_priority, std::size_t max_out)
{
    GameGraph g = random_arena(rng, {vertices, 1, max_out, 0});
    std::vector<Priority> priority(vertices);
    for (auto& q : priority) q = static_cast<Priority>(uniform(rng, 0, max_priority));
    return ParityGame(std::move(g), std::move(priority));
}

IntervalUnion random_intervals(Rng& rng, const IntervalParams& p)
{
    if (p.denominator < 1 || p.lo > p.hi) throw Error(ErrorKind::BadParameters, "bad interval parameters");
    for (;;) {
        const std::size_t pieces = pick(rng, 0, p.max_pieces);
        std::vector<Rational> ends;
        for (std::size_t k = 0; k < 2 * pieces; ++k)
            ends.emplace_back(uniform(rng, p.lo * p.denominator, p.hi * p.denominator), p.denominator);
        std::sort(ends.begin(), ends.end());

        std::vector<Interval> out;
        for (std::size_t k = 0; k < pieces; ++k) {
            ExtendedRational lo = ends[2 * k], hi = ends[2 * k + 1];
            bool lo_open = coin(rng), hi_open = coin(rng);
            if (p.unbounded && k == 0 && coin(rng, 1, 4)) lo = ExtendedRational::minus_inf();
            if (p.unbounded && k + 1 == pieces && coin(rng, 1, 4)) hi = ExtendedRational::plus_inf();
            if (!lo.is_finite()) lo_open = true;
            if (!hi.is_finite()) hi_open = true;
            if (lo == hi) lo_open = hi_open = false;
            out.emplace_back(lo, lo_open, hi, hi_open);
        }
        IntervalUnion u(std::move(out));
        if (!p.singletons && (u.has_singleton_interval() || u.has_singleton_gap())) continue;
        return u;
    }
}

CountdownInstance random_countdown(Rng& rng, std::size_t vertices, Weight max_decrement, std::int64_t credit)
{
    if (vertices == 0 || max_decrement < 1 || credit < 1)
        throw Error(ErrorKind::BadParameters, "countdown needs vertices, a positive decrement and credit");
    std::vector<Player> owners(vertices);
    for (auto& o : owners) o = coin(rng) ? Player::Eve : Player::Adam;
    owners[pick(rng, 0, vertices - 1)] = Player::Eve;
    std::vector<Vertex> eves;
    for (Vertex v = 0; v < vertices; ++v)
        if (owners[v] == Player::Eve) eves.push_back(v);

    std::vector<Edge> edges;
    for (Vertex v = 0; v < vertices; ++v) {
        const std::size_t out = pick(rng, 1, 2);
        for (std::size_t k = 0; k < out; ++k) {
            // Adam only ever hands the turn back to Eve
            const Vertex dst = owners[v] == Player::Adam ? eves[pick(rng, 0, eves.size() - 1)]
                                                         : static_cast<Vertex>(pick(rng, 0, vertices - 1));
            edges.push_back({v, dst, -uniform(rng, 1, max_decrement)});
        }
    }
    CountdownInstance cd{GameGraph(std::move(owners), std::move(edges), 0, default_names(vertices)), credit};
    cd.validate();
    return cd;
}

SubsetSumInstance random_subset_sum(Rng& rng, std::size_t pairs, std::uint64_t max_value)
{
    if (pairs == 0 || max_value == 0) throw Error(ErrorKind::BadParameters, "subset sum needs pairs and values");
    SubsetSumInstance s;
    std::int64_t target = 0;
    for (std::size_t k = 0; k < pairs; ++k) {
        const auto a = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<std::int64_t>(max_value)));
        const auto b = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<std::int64_t>(max_value)));
        s.pairs.emplace_back(a, b);
        target += static_cast<std::int64_t>(coin(rng) ? a : b);
    }
    // a reachable sum, sometimes nudged off
    if (coin(rng, 1, 3)) target += uniform(rng, -2, 2);
    s.target = static_cast<std::uint64_t>(std::max<std::int64_t>(0, target));
    return s;
}

} // namespace ivg::gen
