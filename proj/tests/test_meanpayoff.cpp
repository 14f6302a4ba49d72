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

#include <gtest/gtest.h>

#include "ivg/meanpayoff.hpp"
#include "ivg/oracle.hpp"
#include "ivg/random_instances.hpp"
#include "support.hpp"

using namespace ivg;
using ivg::test::arena;
using ivg::test::intervals;
using ivg::test::parity;
using ivg::test::q;

TEST(MpThreshold, Examples)
{
    EXPECT_TRUE(mp_threshold(arena("E", {{0, 0, 1}}), {0, Comparison::GE}).eve.contains(0));
    EXPECT_TRUE(mp_threshold(arena("E", {{0, 0, 0}}), {0, Comparison::GT}).adam.contains(0));
    EXPECT_TRUE(mp_threshold(arena("A", {{0, 0, 0}, {0, 0, 2}}), {1, Comparison::GE}).adam.contains(0));
    EXPECT_TRUE(mp_threshold(arena("E", {{0, 0, 0}, {0, 0, 2}}), {1, Comparison::GE}).eve.contains(0));
}

TEST(MpThreshold, StrictThresholdsUseTheDenominatorBound)
{
    // Cycle of length 3 with mean 1/3.
    const GameGraph g = arena("EEE", {{0, 1, 1}, {1, 2, 0}, {2, 0, 0}});
    EXPECT_TRUE(mp_threshold(g, {q("1/3"), Comparison::GE}).eve.contains(0));
    EXPECT_TRUE(mp_threshold(g, {q("1/3"), Comparison::GT}).adam.contains(0));
    EXPECT_TRUE(mp_threshold(g, {q("1/3"), Comparison::LE}).eve.contains(0));
    EXPECT_TRUE(mp_threshold(g, {q("1/3"), Comparison::LT}).adam.contains(0));
    EXPECT_TRUE(mp_threshold(g, {q("1/4"), Comparison::GT}).eve.contains(0));
}

TEST(MpThreshold, StrategiesAreWitnesses)
{
    gen::Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const GameGraph g = gen::random_arena(rng, {4, 1, 2, 3});
        const ThresholdQuery query{Rational(gen::uniform(rng, -2, 2), gen::uniform(rng, 1, 3)), Comparison::GE};
        const Regions r = mp_threshold(g, query);
        ASSERT_TRUE(r.eve_strategy && r.adam_strategy);
        // Fix both strategies inside their regions; the cycle mean must agree.
        std::vector<EdgeId> choice(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const bool mine = (g.owner(v) == Player::Eve) == r.eve.contains(v);
            const PositionalStrategy& s = r.eve.contains(v) ? *r.eve_strategy : *r.adam_strategy;
            choice[v] = mine ? s.at(v) : g.out_edges(v)[0];
        }
        for (Vertex v : r.eve.members()) {
            // Adam's first edge is one positional reply; Eve's strategy must hold.
            const auto l = oracle::induced_lasso(g, v, choice);
            ASSERT_GE(oracle::play_value(g, l, Payoff::MpInf), ExtendedRational(query.threshold));
        }
    }
}

TEST(MpInterval, EmptyIntervalGivesAdamEverything)
{
    EXPECT_EQ(solve_mp_interval(test::fig1_arena(), {}).adam, VertexSet(2, true));
}

TEST(MpInterval, Fig1EveWinsEverywhere)
{
    const Regions r = solve_mp_interval(test::fig1_arena(), intervals("(0,1] [2,inf)"));
    EXPECT_EQ(r.eve, VertexSet(2, true));
}

TEST(MpInterval, LeftUnboundedGoesThroughTheDual)
{
    // Adam alternates the loops for mean 0; each positional choice alone would lose.
    const GameGraph g = arena("A", {{0, 0, -1}, {0, 0, 1}});
    EXPECT_TRUE(solve_mp_interval(g, intervals("(-inf,-1] [1,inf)")).adam.contains(0));
    EXPECT_TRUE(solve_mp_interval(g, intervals("(-inf,0)")).adam.contains(0));
    const GameGraph e = arena("E", {{0, 0, -1}, {0, 0, 1}});
    EXPECT_TRUE(solve_mp_interval(e, intervals("(-inf,-1] [1,inf)")).eve.contains(0));
    EXPECT_TRUE(solve_mp_interval(e, intervals("(-inf,0)")).eve.contains(0));
}

TEST(MpInterval, ClosureCounterexample)
{
    // Removing A' and B' without re-closing would strand v; see the decisions ledger.
    // v (Eve) -> u1, u1 a cycle of weights 1,2 via u1'; v -> u2 with self-loop -1.
    const GameGraph g = arena("EAAA", {{0, 1, 0}, {0, 3, 0}, {1, 2, 1}, {2, 1, 2}, {3, 3, -1}});
    const Regions r = solve_mp_interval(g, intervals("[0,1] [2,inf)"));
    r.check_partition();
    EXPECT_TRUE(r.adam.contains(0));
    EXPECT_TRUE(r.adam.contains(1));
    EXPECT_TRUE(r.adam.contains(3));
}

TEST(MpSingle, Examples)
{
    EXPECT_TRUE(solve_mp_single(arena("E", {{0, 0, 0}}), Interval::closed(0, 0)).eve.contains(0));
    EXPECT_TRUE(solve_mp_single(arena("A", {{0, 0, -1}, {0, 0, 1}}), Interval::closed(0, 0)).adam.contains(0));
    EXPECT_TRUE(solve_mp_single(arena("E", {{0, 0, -1}, {0, 0, 1}}), Interval::closed(0, 0)).eve.contains(0));
}

TEST(MpSingle, AdamStrategyIsPositional)
{
    const Regions r = solve_mp_single(arena("A", {{0, 0, -1}, {0, 0, 1}}), Interval::closed(0, 0));
    ASSERT_TRUE(r.adam_strategy);
    EXPECT_TRUE(r.adam_strategy->defined(0));
}

TEST(ParityToMp, Structure)
{
    const ParityGame p = parity("EA", {{0, 1}, {1, 0}, {1, 1}}, {0, 1});
    const IntervalGame m = parity_to_mp(p);
    EXPECT_EQ(m.graph.num_vertices(), 4 * p.num_vertices());
    EXPECT_EQ(m.graph.num_edges(), p.graph.num_edges() + 6 * p.num_vertices());
    EXPECT_EQ(m.intervals, intervals("[0,1) [2,3)"));
}

TEST(ParityToMp, SingleVertex)
{
    const IntervalGame even = parity_to_mp(parity("E", {{0, 0}}, {0}));
    EXPECT_EQ(even.graph.num_vertices(), 4u);
    EXPECT_TRUE(solve_mp_interval(even.graph, even.intervals).eve.contains(0));

    const IntervalGame odd = parity_to_mp(parity("E", {{0, 0}}, {1}));
    EXPECT_TRUE(solve_mp_interval(odd.graph, odd.intervals).adam.contains(0));
}

TEST(ParityToMp, RejectsLargePriorities)
{
    EXPECT_THROW(parity_to_mp(parity("E", {{0, 0}}, {2})), Error);
}

TEST(MpInterval, Duality)
{
    gen::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const GameGraph g = gen::random_arena(rng, {static_cast<std::size_t>(gen::uniform(rng, 1, 5)), 1, 2, 3});
        const IntervalUnion i = gen::random_intervals(rng, {2, -3, 3, 2, true, true});
        const Regions r = solve_mp_interval(g, i);
        const Regions d = solve_mp_interval(g.with_swapped_players(), complement_intervals(i));
        ASSERT_EQ(r.eve, d.adam) << i.str();
    }
}

TEST(MpInterval, Monotone)
{
    gen::Rng rng(37);
    for (int t = 0; t < 150; ++t) {
        const GameGraph g = gen::random_arena(rng, {4, 1, 2, 3});
        const IntervalUnion small = gen::random_intervals(rng, {2, -3, 3, 1, true, true});
        const IntervalUnion big = small.unite(gen::random_intervals(rng, {1, -3, 3, 1, true, true}));
        ASSERT_TRUE(solve_mp_interval(g, small).eve.is_subset_of(solve_mp_interval(g, big).eve));
    }
}
