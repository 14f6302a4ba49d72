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


#ifndef IVG_ORACLE_HPP
#define IVG_ORACLE_HPP

// Brute-force references for cross-checking the solvers. Nothing here calls
// into the solver modules; only the arena types are shared.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ivg/arena.hpp"

namespace ivg::oracle {

/// prefix followed by cycle repeated forever; edges are adjacent and the cycle closes.
struct Lasso {
    std::vector<EdgeId> prefix;
    std::vector<EdgeId> cycle;
};

/// Exact payoff of an ultimately periodic weight sequence. TotalInf may be
/// infinite; every other payoff is finite. Sup payoffs are supported too.
ExtendedRational play_value(std::span<const Weight> prefix, std::span<const Weight> cycle, Payoff payoff,
                            const std::optional<Rational>& lambda = std::nullopt);
ExtendedRational play_value(const GameGraph& g, const Lasso& l, Payoff payoff,
                            const std::optional<Rational>& lambda = std::nullopt);

/// Lowest priority on the cycle of a lasso (min-parity).
std::uint32_t cycle_min_priority(const GameGraph& g, const Lasso& l, std::span<const std::uint32_t> priority);

/// The play from `start` when every vertex v follows choice[v].
Lasso induced_lasso(const GameGraph& g, Vertex start, std::span<const EdgeId> choice);

struct OracleRegions {
    Regions regions;
    bool bound_only = false; // eve is a lower bound on Eve's true region
};

/// Strategy enumeration, guarded by the product of out-degrees (10^6).
///   Positionally determined (exact): liminf/limsup, threshold-shaped mean
///   payoff and total sum, total sum on arenas whose cycles all weigh 0.
///   Other mean-payoff unions: positional Eve strategies checked against
///   arbitrary Adam play, reported bound_only.
/// Throws Error(TooLarge) past the guard and Error(UnsupportedObjective) otherwise.
OracleRegions brute_force_positional(const GameGraph& g, const Objective& o);

/// Min-parity by strategy-pair enumeration. Exact.
Regions brute_force_parity(const GameGraph& g, std::span<const std::uint32_t> priority);

/// All vertices owned by Eve, |V| <= 8: can Eve make MP_inf land in I from v?
/// Answer per vertex. Throws Error(TooLarge) or Error(BadParameters).
std::vector<bool> one_player_mp_achievable(const GameGraph& g, const IntervalUnion& i);

/// Adam wins v iff some positional Adam strategy leaves Eve with no reachable
/// cycle-mean range meeting I.
Regions adam_positional_mp(const GameGraph& g, const IntervalUnion& i);

/// Four values by enumerating Eve's and Adam's positional strategies.
struct DsFourValues {
    std::vector<Rational> maxmax, minmax, maxmin, minmin;
};
DsFourValues ds_four_values(const GameGraph& g, const Rational& lambda);

/// Unpruned, unmemoized alternating search with the four-value endgame after
/// `depth` edges. Throws Error(TooLarge) past `node_limit` nodes.
Regions brute_force_finite_horizon_ds(const GameGraph& g, const Rational& lambda, const IntervalUnion& i,
                                      std::uint64_t depth, std::uint64_t node_limit = 20'000'000);

/// Eve wins from (v, credit) iff she can force the counter to exactly 0; each
/// edge lowers the counter by |w|. Per-vertex answers.
std::vector<bool> countdown_winner(const GameGraph& g, std::int64_t credit);

/// Subset sum game by direct search over selections.
bool subset_sum_game(std::uint64_t target, std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs);

} // namespace ivg::oracle

#endif
