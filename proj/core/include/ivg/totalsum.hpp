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


#ifndef IVG_TOTALSUM_HPP
#define IVG_TOTALSUM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ivg/arena.hpp"
#include "ivg/parity.hpp"

namespace ivg {

/// Parity game on a one-counter graph. Zero-test edges are part of `graph`
/// (weight 0) and flagged in `zero_test`; they fire only at counter 0.
/// The counter starts at 0 and ranges over all integers.
struct OneCounterParityGame {
    GameGraph graph;
    std::vector<char> zero_test; // per edge
    std::vector<Priority> priority;
    /// For reduced total-sum games: the configuration vertex standing for
    /// original vertex v. Empty otherwise.
    std::vector<Vertex> entry;

    /// Throws Error(MalformedDocument) on size mismatches or weighted zero tests.
    void validate() const;
};

/// Regions of a bounded approximation: Eve/Adam are certified, unknown is honest.
struct ThreeValuedRegions {
    Regions regions;
    std::int64_t bound = 0;
    std::size_t configurations = 0;
};

/// Copies (v, b, i) for b in {0,1}, i in [1, 2r+1] at index (2v+b)(2r+1) + i-1,
/// then one v_e per edge, then v0, v_bot, v_top.
/// Throws Error(NoFiniteEndpoint) if I, as a set of integers, is empty or all of Z.
OneCounterParityGame totalsum_to_ocpg(const GameGraph& g, const IntervalUnion& i);

/// Finite parity games on configurations (vertex, counter) with the counter
/// saturating at LOW (< -B) and HIGH (> B). Leaving a saturated slot is
/// resolved by Adam in the run that certifies Eve and by Eve in the run that
/// certifies Adam. Regions are for each vertex at counter 0.
ThreeValuedRegions solve_ocpg_bounded(const OneCounterParityGame& p, std::int64_t bound);

/// max finite |endpoint| + |V| W + 2.
std::int64_t default_bound(const GameGraph& g, const IntervalUnion& i);

/// Total-inf interval game; regions per original vertex.
ThreeValuedRegions solve_total_interval(const GameGraph& g, const IntervalUnion& i,
                                        std::optional<std::int64_t> bound = std::nullopt);

/// Countdown game: weights strictly negative, Eve wins on reaching counter exactly 0.
struct CountdownInstance {
    GameGraph graph;
    std::int64_t credit = 1;

    /// Throws Error(BadParameters) on a non-negative weight or credit <= 0.
    void validate() const;
};

/// Adds Eve vertices v_I (new initial, index |V|) and v_bot (index |V|+1); I = [0,0].
IntervalGame countdown_to_total(const CountdownInstance& cd);

} // namespace ivg

#endif
