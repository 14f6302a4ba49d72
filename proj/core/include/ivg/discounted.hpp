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


#ifndef IVG_DISCOUNTED_HPP
#define IVG_DISCOUNTED_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivg/arena.hpp"

namespace ivg {

/// Exact discounted sum of prefix . cycle^omega.
Rational ds_value_lasso(std::span<const Weight> prefix, std::span<const Weight> cycle, const Rational& lambda);

/// Per-vertex values of Eve's two extreme positional strategies.
///   sigma_max maximizes min_tau val; minmax / maxmax are Adam's min / max against it.
///   sigma_min minimizes max_tau val; maxmin / minmin are Adam's max / min against it.
struct DsValueTable {
    std::vector<Rational> maxmax;
    std::vector<Rational> minmax;
    std::vector<Rational> maxmin;
    std::vector<Rational> minmin;
    PositionalStrategy sigma_max;
    PositionalStrategy sigma_min;
};

DsValueTable ds_optimal_values(const GameGraph& g, const Rational& lambda);

/// Least n with lambda^(n+1) * 2W / (1 - lambda) < d. Returns 0 when W = 0.
/// Throws Error(NonpositiveWidth) for d <= 0.
std::uint64_t horizon(Weight max_abs, const Rational& lambda, const Rational& d);
std::uint64_t horizon(const GameGraph& g, const Rational& lambda, const Rational& d);

struct DsOptions {
    std::uint64_t extra_depth = 0; // search N + 1 + extra_depth edges deep
    bool prune = true;
    std::uint64_t node_limit = 50'000'000;
};

struct DsResult {
    Regions regions;
    std::uint64_t horizon = 0; // N
    std::uint64_t depth = 0;   // edges explored before the endgame check
    std::uint64_t nodes = 0;
};

/// Alternating search to depth N+1 with the four-value endgame at the leaves.
/// Throws Error(SingletonNotSupported) if I or its complement has an isolated point,
/// and Error(TooLarge) past the node limit.
DsResult solve_ds_interval(const GameGraph& g, const Rational& lambda, const IntervalUnion& i,
                           const DsOptions& opts = {});

struct SubsetSumInstance {
    std::uint64_t target = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

    /// Throws Error(BadParameters) on an empty pair list.
    void validate() const;
};

struct DsReduction {
    GameGraph graph;
    IntervalUnion intervals;
    Rational lambda;
    Rational scale; // every weight and endpoint was multiplied by this
    std::string comment;
};

/// Chain v1 .. v(n+1) with v_i owned by Eve iff i is even. For lambda = p/q
/// the weights a_i / lambda^(i-1) are scaled by p^(n-1) to make them integers.
DsReduction subset_sum_to_ds(const SubsetSumInstance& s, const Rational& lambda);

} // namespace ivg

#endif
