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

#include "ivg/arena.hpp"
#include "ivg/document.hpp"
#include "ivg/error.hpp"
#include "support.hpp"

using namespace ivg;
using ivg::test::arena;
using ivg::test::intervals;
using ivg::test::q;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no ivg::Error thrown";
    return ErrorKind::TooLarge;
}

const char* kFig1 = R"({
  "vertices": [{"id": "q0", "owner": "eve"}, {"id": "q1", "owner": "adam"}],
  "edges": [{"src": "q0", "dst": "q1", "weight": 1}, {"src": "q1", "dst": "q1", "weight": 2},
            {"src": "q1", "dst": "q0", "weight": 1}, {"src": "q0", "dst": "q0", "weight": 0}],
  "initial": "q0",
  "objective": {"payoff": "mp-inf", "intervals": [
    {"lo": "0", "hi": "1", "lo_open": true, "hi_open": false},
    {"lo": "2", "hi": "inf", "lo_open": false, "hi_open": true}]}
})";

} // namespace

TEST(Rational, ParsesAndCanonicalizes)
{
    EXPECT_EQ(q("2/4"), Rational(1, 2));
    EXPECT_EQ(q("-3"), Rational(-3));
    EXPECT_EQ(q("-6/4").str(), "-3/2");
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(kind_of([] { q("1.5"); }), ErrorKind::MalformedDocument);
    EXPECT_EQ(kind_of([] { q("1/0"); }), ErrorKind::MalformedDocument);
}

TEST(Rational, ExtendedOrder)
{
    const auto lo = ExtendedRational::minus_inf(), hi = ExtendedRational::plus_inf();
    EXPECT_LT(lo, ExtendedRational(-1000000));
    EXPECT_LT(ExtendedRational(q("1000000")), hi);
    EXPECT_EQ(hi.negated(), lo);
    EXPECT_EQ(ExtendedRational::parse("inf"), hi);
}

TEST(Interval, MergesOnConstruction)
{
    EXPECT_EQ(intervals("[0,1] (1,2]"), intervals("[0,2]"));
    EXPECT_EQ(intervals("[0,1) (1,2]").size(), 2u);
    EXPECT_EQ(intervals("[3,4] [0,1]").intervals().front().hi(), ExtendedRational(1));
    EXPECT_EQ(kind_of([] { Interval(1, false, 0, false); }), ErrorKind::EmptyInterval);
    EXPECT_EQ(kind_of([] { Interval(1, true, 1, false); }), ErrorKind::EmptyInterval);
}

TEST(Interval, Contains)
{
    const IntervalUnion a = intervals("(0,1]");
    EXPECT_TRUE(contains(a, 1));
    EXPECT_FALSE(contains(a, 0));
    EXPECT_TRUE(contains(intervals("[2,inf)"), ExtendedRational::plus_inf()));
    EXPECT_FALSE(contains(intervals("(0,1] [2,inf)"), q("3/2")));
    EXPECT_FALSE(contains(intervals("[2,inf)"), ExtendedRational::minus_inf()));
    EXPECT_TRUE(contains(intervals("(-inf,0]"), ExtendedRational::minus_inf()));
}

TEST(Interval, Complement)
{
    EXPECT_EQ(complement_intervals(intervals("(0,1] [2,inf)")), intervals("(-inf,0] (1,2)"));
    EXPECT_EQ(complement_intervals(IntervalUnion{}), IntervalUnion::everything());
    const IntervalUnion i = intervals("[-1,0) {5}");
    EXPECT_EQ(complement_intervals(complement_intervals(i)), i);
}

TEST(Interval, SingletonFlags)
{
    EXPECT_TRUE(intervals("{2}").has_singleton_interval());
    EXPECT_TRUE(intervals("[0,1) (1,2]").has_singleton_gap());
    EXPECT_FALSE(intervals("[0,1) [2,3]").has_singleton_gap());
    EXPECT_FALSE(intervals("(-inf,1]").has_singleton_interval());
}

TEST(Arena, Validation)
{
    EXPECT_EQ(kind_of([] { arena("EA", {{0, 1, 0}}); }), ErrorKind::DeadEndVertex);
    EXPECT_EQ(kind_of([] { arena("E", {{0, 1, 0}}); }), ErrorKind::UnknownVertexReference);
    const GameGraph g = arena("EE", {{0, 1, 1}, {0, 1, 2}, {1, 1, 0}});
    EXPECT_EQ(g.num_edges(), 3u); // parallel edges are fine
    EXPECT_EQ(g.out_edges(0).size(), 2u);
}

TEST(Arena, MaxAbsWeight)
{
    EXPECT_EQ(max_abs_weight(arena("EE", {{0, 1, -3}, {1, 0, 2}})), 3);
    EXPECT_EQ(max_abs_weight(arena("E", {{0, 0, 0}})), 0);
    EXPECT_EQ(max_abs_weight(test::fig1_arena()), 2);
}

TEST(Arena, Normalize)
{
    const GameGraph loop2 = arena("E", {{0, 0, 2}});
    const NormalizedGame n = normalize(loop2, {Payoff::Limsup, std::nullopt, intervals("[2,2]")});
    EXPECT_EQ(n.objective.payoff, Payoff::Liminf);
    EXPECT_EQ(n.graph.edge(0).weight, -2);
    EXPECT_EQ(n.objective.intervals, intervals("[-2,-2]"));

    const Objective li{Payoff::Liminf, std::nullopt, intervals("[0,1)")};
    EXPECT_EQ(normalize(loop2, li).graph, loop2);
    EXPECT_EQ(normalize(loop2, li).objective, li);

    const NormalizedGame t = normalize(arena("E", {{0, 0, 1}}), {Payoff::TotalSup, std::nullopt, intervals("[0,inf)")});
    EXPECT_EQ(t.objective.payoff, Payoff::TotalInf);
    EXPECT_EQ(t.graph.edge(0).weight, -1);
    EXPECT_EQ(t.objective.intervals, intervals("(-inf,0]"));
}

TEST(Arena, Subgame)
{
    const GameGraph g = arena("EE", {{0, 1, 0}, {1, 0, 0}, {1, 1, 5}});
    EXPECT_EQ(subgame(g, VertexSet(2)).graph, g);
    const Subgame s = subgame(g, VertexSet::of(2, {0}));
    EXPECT_EQ(s.graph.num_vertices(), 1u);
    EXPECT_EQ(s.graph.edge(0).weight, 5);
    EXPECT_EQ(s.to_parent[0], 1u);

    const GameGraph cycle = arena("EE", {{0, 1, 0}, {1, 0, 0}});
    EXPECT_EQ(kind_of([&] { subgame(cycle, VertexSet::of(2, {0})); }), ErrorKind::DeadEndVertex);
}

TEST(Document, ParsesSmallest)
{
    const GameDocument d = parse_game(R"({"vertices": [{"id": "q0", "owner": "eve"}],
        "edges": [{"src": "q0", "dst": "q0", "weight": 0}], "initial": "q0",
        "objective": {"payoff": "liminf", "intervals": [{"lo": "0", "hi": "0", "lo_open": false, "hi_open": false}]}})");
    EXPECT_EQ(d.graph.num_vertices(), 1u);
    EXPECT_EQ(d.graph.num_edges(), 1u);
    EXPECT_EQ(d.objective.payoff, Payoff::Liminf);
}

TEST(Document, ParsesFig1)
{
    const GameDocument d = parse_game(kFig1);
    EXPECT_EQ(d.graph.num_vertices(), 2u);
    EXPECT_EQ(d.graph.num_edges(), 4u);
    EXPECT_EQ(d.objective.intervals.size(), 2u);
    EXPECT_EQ(d.graph.owner(*d.graph.find("q1")), Player::Adam);
}

TEST(Document, Errors)
{
    EXPECT_EQ(kind_of([] { parse_game("{"); }), ErrorKind::MalformedDocument);
    EXPECT_EQ(kind_of([] {
                  parse_game(R"({"vertices": [{"id": "a", "owner": "eve"}, {"id": "b", "owner": "eve"}],
                     "edges": [{"src": "a", "dst": "b", "weight": 0}], "initial": "a",
                     "objective": {"payoff": "liminf", "intervals": []}})");
              }),
              ErrorKind::DeadEndVertex);
    EXPECT_EQ(kind_of([] {
                  parse_game(R"({"vertices": [{"id": "a", "owner": "eve"}],
                     "edges": [{"src": "a", "dst": "z", "weight": 0}], "initial": "a",
                     "objective": {"payoff": "liminf", "intervals": []}})");
              }),
              ErrorKind::UnknownVertexReference);
    EXPECT_EQ(kind_of([] {
                  parse_game(R"({"vertices": [{"id": "a", "owner": "eve"}],
                     "edges": [{"src": "a", "dst": "a", "weight": 0}], "initial": "a",
                     "objective": {"payoff": "discounted", "lambda": "1", "intervals": []}})");
              }),
              ErrorKind::LambdaOutOfRange);
    EXPECT_EQ(kind_of([] {
                  parse_game(R"({"vertices": [{"id": "a", "owner": "eve"}],
                     "edges": [{"src": "a", "dst": "a", "weight": 0}], "initial": "a",
                     "objective": {"payoff": "liminf", "intervals": [{"lo": "2", "hi": "1", "lo_open": false, "hi_open": false}]}})");
              }),
              ErrorKind::EmptyInterval);
}

TEST(Document, RoundTrip)
{
    const GameDocument d = parse_game(kFig1);
    const std::string once = serialize_game(d);
    const GameDocument again = parse_game(once);
    EXPECT_EQ(again.graph, d.graph);
    EXPECT_EQ(again.objective, d.objective);
    EXPECT_EQ(serialize_game(again), once);
}
