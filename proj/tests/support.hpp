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

#ifndef IVG_TESTS_SUPPORT_HPP
#define IVG_TESTS_SUPPORT_HPP

// Shorthand for building small games in tests.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ivg/arena.hpp"
#include "ivg/error.hpp"
#include "ivg/interval.hpp"
#include "ivg/parity.hpp"

namespace ivg::test {

// owners: one character per vertex, 'E' or 'A'.
inline GameGraph arena(std::string_view owners, std::vector<Edge> edges, Vertex initial = 0)
{
    std::vector<Player> o;
    for (char c : owners) o.push_back(c == 'E' ? Player::Eve : Player::Adam);
    return GameGraph(std::move(o), std::move(edges), initial);
}

inline ParityGame parity(std::string_view owners, std::vector<std::pair<Vertex, Vertex>> moves,
                         std::vector<Priority> priority)
{
    std::vector<Edge> edges;
    for (auto [s, d] : moves) edges.push_back({s, d, 0});
    return ParityGame(arena(owners, std::move(edges)), std::move(priority));
}

// "(0,1] [2,inf) {5}" style unions; an empty string is the empty set.
inline IntervalUnion intervals(std::string_view text)
{
    std::vector<Interval> pieces;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok.front() == '{') {
            pieces.push_back(Interval::singleton(Rational::parse(tok.substr(1, tok.size() - 2))));
            continue;
        }
        const auto comma = tok.find(',');
        const bool lo_open = tok.front() == '(', hi_open = tok.back() == ')';
        pieces.emplace_back(ExtendedRational::parse(tok.substr(1, comma - 1)), lo_open,
                            ExtendedRational::parse(tok.substr(comma + 1, tok.size() - comma - 2)), hi_open);
    }
    return IntervalUnion(std::move(pieces));
}

inline Rational q(std::string_view s) { return Rational::parse(s); }

// The arena of the infinite-memory mean-payoff example: q0 Eve, q1 Adam.
inline GameGraph fig1_arena()
{
    return arena("EA", {{0, 1, 1}, {1, 1, 2}, {1, 0, 1}, {0, 0, 0}});
}

inline std::vector<Vertex> members(const VertexSet& s) { return s.members(); }

} // namespace ivg::test

#endif
