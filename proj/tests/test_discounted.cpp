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

#include <functional>

#include <gtest/gtest.h>

#include "ivg/discounted.hpp"
#include "ivg/oracle.hpp"
#include "ivg/random_instances.hpp"
#include "support.hpp"

using namespace ivg;
using ivg::test::arena;
using ivg::test::intervals;
using ivg::test::q;

namespace {

const Rational kHalf(1, 2);

std::vector<Weight> w(std::initializer_list<Weight> xs) { return xs; }

} // namespace

TEST(DsLasso, Examples)
{
    EXPECT_EQ(ds_value_lasso(w({}), w({1}), kHalf), Rational(2));
    EXPECT_EQ(ds_value_lasso(w({1}), w({0}), kHalf), Rational(1));
    EXPECT_EQ(ds_value_lasso(w({}), w({1, 0}), kHalf), q("4/3"));
    EXPECT_EQ(ds_value_lasso(w({3, -1}), w({2}), q("2/3")), Rational(3) - q("2/3") + q("4/9") * 6);
}

TEST(DsValues, SingleLoop)
{
    const DsValueTable t = ds_optimal_values(arena("E", {{0, 0, 1}}), kHalf);
    EXPECT_EQ(t.maxmax[0], 2);
    EXPECT_EQ(t.minmax[0], 2);
    EXPECT_EQ(t.maxmin[0], 2);
    EXPECT_EQ(t.minmin[0], 2);
}

TEST(DsValues, EveControls)
{
    const DsValueTable t = ds_optimal_values(arena("E", {{0, 0, 0}, {0, 0, 1}}), kHalf);
    EXPECT_EQ(t.maxmax[0], 2);
    EXPECT_EQ(t.minmax[0], 2);
    EXPECT_EQ(t.maxmin[0], 0);
    EXPECT_EQ(t.minmin[0], 0);
    EXPECT_EQ(t.sigma_max.at(0), 1u);
    EXPECT_EQ(t.sigma_min.at(0), 0u);
}

TEST(DsValues, AdamControls)
{
    const DsValueTable t = ds_optimal_values(arena("A", {{0, 0, 0}, {0, 0, 1}}), kHalf);
    EXPECT_EQ(t.minmax[0], 0);
    EXPECT_EQ(t.minmin[0], 0);
    EXPECT_EQ(t.maxmax[0], 2);
    EXPECT_EQ(t.maxmin[0], 2);
}

TEST(DsValues, MatchOracleAndStayInRange)
{
    gen::Rng rng(41);
    for (int i = 0; i < 150; ++i) {
        const GameGraph g = gen::random_arena(rng, {static_cast<std::size_t>(gen::uniform(rng, 1, 4)), 1, 2, 2});
        const Rational lambda = gen::coin(rng) ? kHalf : q("2/3");
        const DsValueTable t = ds_optimal_values(g, lambda);
        const oracle::DsFourValues o = oracle::ds_four_values(g, lambda);
        const Rational bound = Rational(max_abs_weight(g)) / (Rational(1) - lambda);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            ASSERT_EQ(t.maxmax[v], o.maxmax[v]);
            ASSERT_EQ(t.minmax[v], o.minmax[v]);
            ASSERT_EQ(t.maxmin[v], o.maxmin[v]);
            ASSERT_EQ(t.minmin[v], o.minmin[v]);
            ASSERT_LE(t.minmin[v], t.minmax[v]);
            ASSERT_LE(t.minmax[v], t.maxmax[v]);
            ASSERT_LE(t.minmin[v], t.maxmin[v]);
            ASSERT_LE(t.maxmin[v], t.maxmax[v]);
            ASSERT_LE(t.maxmax[v].abs(), bound);
            ASSERT_LE(t.minmin[v].abs(), bound);
        }
    }
}

TEST(Horizon, Examples)
{
    EXPECT_EQ(horizon(1, kHalf, 2), 1u);
    EXPECT_EQ(horizon(1, kHalf, kHalf), 3u);
    EXPECT_EQ(horizon(0, kHalf, kHalf), 0u);
    EXPECT_THROW(horizon(1, kHalf, 0), Error);
}

TEST(Horizon, DefiningProperty)
{
    gen::Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        const Weight W = gen::uniform(rng, 1, 5);
        const Rational lambda(gen::uniform(rng, 1, 4), 5);
        const Rational d(gen::uniform(rng, 1, 20), gen::uniform(rng, 1, 6));
        const std::uint64_t n = horizon(W, lambda, d);
        const Rational c = Rational(2 * W) / (Rational(1) - lambda);
        ASSERT_LT(lambda.pow(static_cast<unsigned>(n + 1)) * c, d);
        if (n > 0) ASSERT_GE(lambda.pow(static_cast<unsigned>(n)) * c, d);
    }
}

TEST(DsInterval, Examples)
{
    const GameGraph loop = arena("E", {{0, 0, 1}});
    EXPECT_TRUE(solve_ds_interval(loop, kHalf, intervals("(3/2,5/2)")).regions.eve.contains(0));
    EXPECT_TRUE(solve_ds_interval(loop, kHalf, intervals("(0,1)")).regions.adam.contains(0));
    try {
        solve_ds_interval(loop, kHalf, intervals("{2}"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingletonNotSupported);
        EXPECT_STREQ(e.what(), "singleton intervals unsupported for discounted sum");
    }
    EXPECT_THROW(solve_ds_interval(loop, kHalf, intervals("[0,1) (1,2]")), Error);
}

TEST(DsInterval, EmptyAndEverything)
{
    const GameGraph g = arena("EA", {{0, 1, 1}, {1, 0, -1}});
    EXPECT_EQ(solve_ds_interval(g, kHalf, {}).regions.adam, VertexSet(2, true));
    EXPECT_EQ(solve_ds_interval(g, kHalf, IntervalUnion::everything()).regions.eve, VertexSet(2, true));
}

TEST(DsInterval, PruningDoesNotChangeVerdicts)
{
    gen::Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        const GameGraph g = gen::random_arena(rng, {3, 1, 2, 2});
        const IntervalUnion in = gen::random_intervals(rng, {2, -4, 4, 1, true, false});
        DsOptions off;
        off.prune = false;
        ASSERT_EQ(solve_ds_interval(g, kHalf, in).regions.eve, solve_ds_interval(g, kHalf, in, off).regions.eve);
    }
}

TEST(DsInterval, OnePlayerMatchesLassoEnumeration)
{
    gen::Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        GameGraph g = gen::random_arena(rng, {static_cast<std::size_t>(gen::uniform(rng, 1, 3)), 1, 2, 2});
        g = GameGraph(std::vector<Player>(g.num_vertices(), Player::Eve), g.edges(), g.initial());
        const IntervalUnion in = gen::random_intervals(rng, {2, -4, 4, 1, false, false});
        const Regions r = solve_ds_interval(g, kHalf, in).regions;
        // Exhaustive lassos: walks of length <= 2|V| from v, closing on an earlier position.
        const std::size_t n = g.num_vertices();
        for (Vertex v = 0; v < n; ++v) {
            bool found = false;
            std::vector<EdgeId> walk;
            std::function<void(Vertex)> go = [&](Vertex u) {
                if (found) return;
                // Close a cycle at any earlier position that sits at u.
                Vertex at = v;
                for (std::size_t k = 0; k <= walk.size() && !found; ++k) {
                    if (at == u && k < walk.size()) {
                        std::vector<Weight> pre, cyc;
                        for (std::size_t j = 0; j < k; ++j) pre.push_back(g.edge(walk[j]).weight);
                        for (std::size_t j = k; j < walk.size(); ++j) cyc.push_back(g.edge(walk[j]).weight);
                        if (contains(in, ds_value_lasso(pre, cyc, kHalf))) found = true;
                    }
                    if (k < walk.size()) at = g.edge(walk[k]).dst;
                }
                if (walk.size() == 2 * n) return;
                for (EdgeId e : g.out_edges(u)) {
                    walk.push_back(e);
                    go(g.edge(e).dst);
                    walk.pop_back();
                }
            };
            go(v);
            ASSERT_EQ(r.eve.contains(v), found) << "instance " << i << " vertex " << v << " " << in.str();
        }
    }
}

TEST(SubsetSumReduction, Structure)
{
    const DsReduction r = subset_sum_to_ds({1, {{1, 2}}}, kHalf);
    EXPECT_EQ(r.graph.num_vertices(), 2u);
    EXPECT_EQ(r.graph.num_edges(), 3u);
    EXPECT_EQ(r.graph.owner(0), Player::Adam);
    EXPECT_EQ(r.graph.edge(0).weight, 1);
    EXPECT_EQ(r.graph.edge(1).weight, 2);
    EXPECT_EQ(r.intervals, intervals("(0,2)"));
    EXPECT_TRUE(solve_ds_interval(r.graph, r.lambda, r.intervals).regions.adam.contains(0));
}

TEST(SubsetSumReduction, EveWinsTheTwoPairExample)
{
    const DsReduction r = subset_sum_to_ds({4, {{1, 2}, {3, 2}}}, kHalf);
    EXPECT_EQ(r.graph.num_vertices(), 3u);
    EXPECT_EQ(r.graph.num_edges(), 5u);
    EXPECT_EQ(r.graph.owner(1), Player::Eve);
    EXPECT_TRUE(solve_ds_interval(r.graph, r.lambda, r.intervals).regions.eve.contains(0));
    EXPECT_TRUE(oracle::subset_sum_game(4, std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 2}, {3, 2}}));
}

TEST(SubsetSumReduction, IntegerWeightsForOtherLambdas)
{
    const DsReduction r = subset_sum_to_ds({5, {{1, 2}, {3, 2}, {2, 0}}}, q("2/3"));
    // Undo the scale and compare each weight's discounted contribution.
    for (const Edge& e : r.graph.edges()) EXPECT_GE(e.weight, 0);
    const Rational lambda = q("2/3");
    EXPECT_EQ(Rational(r.graph.edge(4).weight) * lambda.pow(2) / r.scale, Rational(2));
    EXPECT_EQ(Rational(r.graph.edge(2).weight) * lambda / r.scale, Rational(3));
}
