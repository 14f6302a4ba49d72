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

// Randomized structural properties that cut across modules.

#include <gtest/gtest.h>

#include "ivg/document.hpp"
#include "ivg/liminf.hpp"
#include "ivg/meanpayoff.hpp"
#include "ivg/random_instances.hpp"
#include "ivg/totalsum.hpp"
#include "support.hpp"

using namespace ivg;

TEST(Properties, DocumentRoundTrip)
{
    gen::Rng rng(71);
    const Payoff kinds[] = {Payoff::Liminf, Payoff::Limsup, Payoff::MpInf, Payoff::MpSup,
                            Payoff::Discounted, Payoff::TotalInf, Payoff::TotalSup};
    for (int t = 0; t < 200; ++t) {
        const Payoff p = kinds[gen::uniform(rng, 0, 6)];
        Objective o{p, std::nullopt, gen::random_intervals(rng, {3, -5, 5, 3, true, true})};
        if (p == Payoff::Discounted) o.lambda = Rational(gen::uniform(rng, 1, 6), 7);
        const GameDocument d = make_document(gen::random_arena(rng, {5, 1, 3, 9}), o, "round trip");
        const std::string text = serialize_game(d);
        const GameDocument back = parse_game(text);
        ASSERT_EQ(back.graph, d.graph);
        ASSERT_EQ(back.objective, d.objective);
        ASSERT_EQ(serialize_game(back), text);
    }
}

TEST(Properties, ComplementIsExact)
{
    gen::Rng rng(73);
    for (int t = 0; t < 300; ++t) {
        const IntervalUnion i = gen::random_intervals(rng, {3, -4, 4, 2, true, true});
        const IntervalUnion c = complement_intervals(i);
        ASSERT_EQ(complement_intervals(c), i);
        for (const ExtendedRational& x : {ExtendedRational::plus_inf(), ExtendedRational::minus_inf()})
            ASSERT_NE(contains(i, x), contains(c, x));
        for (int k = 0; k < 40; ++k) {
            const Rational x(gen::uniform(rng, -24, 24), 4);
            ASSERT_NE(contains(i, x), contains(c, x)) << i.str() << " " << x;
        }
    }
}

TEST(Properties, NormalizeIsAnInvolutionOnSupPayoffs)
{
    gen::Rng rng(79);
    for (int t = 0; t < 100; ++t) {
        const GameGraph g = gen::random_arena(rng, {4, 1, 2, 3});
        const IntervalUnion i = gen::random_intervals(rng, {2, -3, 3, 1, true, true});
        const NormalizedGame n = normalize(g, {Payoff::Limsup, std::nullopt, i});
        ASSERT_EQ(n.objective.intervals.negated(), i);
        for (EdgeId e = 0; e < g.num_edges(); ++e) ASSERT_EQ(n.graph.edge(e).weight, -g.edge(e).weight);
    }
}

TEST(Properties, DeterminacyAcrossSolvers)
{
    gen::Rng rng(83);
    for (int t = 0; t < 100; ++t) {
        const GameGraph g = gen::random_arena(rng, {5, 1, 2, 3});
        const IntervalUnion i = gen::random_intervals(rng, {2, -3, 3, 1, true, true});
        const Regions a = solve_liminf(g, i), b = solve_mp_interval(g, i);
        a.check_partition();
        b.check_partition();
        ASSERT_TRUE(a.unknown.empty());
        ASSERT_TRUE(b.unknown.empty());
        const Regions c = solve_total_interval(g, i, 6).regions;
        c.check_partition();
    }
}

TEST(Properties, ZeroCycleTotalsAreNeverUnknown)
{
    // Potential-based weights make every cycle sum 0; sums stay within |V|W.
    gen::Rng rng(89);
    for (int t = 0; t < 60; ++t) {
        GameGraph g = gen::random_arena(rng, {4, 1, 2, 0});
        std::vector<Weight> pot(g.num_vertices()), w;
        for (auto& p : pot) p = gen::uniform(rng, -2, 2);
        for (const Edge& e : g.edges()) w.push_back(pot[e.dst] - pot[e.src]);
        g = g.with_weights(w);
        const IntervalUnion i = gen::random_intervals(rng, {2, -4, 4, 1, true, true});
        if (integer_points(i).empty() || IntervalUnion(i).is_everything()) continue;
        const Regions r = solve_total_interval(g, i).regions;
        ASSERT_TRUE(r.unknown.empty()) << i.str();
    }
}
