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


#ifndef IVG_RANDOM_INSTANCES_HPP
#define IVG_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <random>

#include "ivg/arena.hpp"
#include "ivg/discounted.hpp"
#include "ivg/parity.hpp"
#include "ivg/totalsum.hpp"

namespace ivg::gen {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Unlike std::uniform_int_distribution the
/// sequence is the same on every standard library.
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);
bool coin(Rng& rng, unsigned num = 1, unsigned den = 2);

struct ArenaParams {
    std::size_t vertices = 4;
    std::size_t min_out = 1;
    std::size_t max_out = 2;
    Weight max_weight = 3;
};

/// Random dead-end free arena; vertex v is named "v<v>".
GameGraph random_arena(Rng& rng, const ArenaParams& p);

ParityGame random_parity(Rng& rng, std::size_t vertices, std::uint32_t max_priority, std::size_t max_out = 2);

struct IntervalParams {
    std::size_t max_pieces = 2;
    std::int64_t lo = -3;
    std::int64_t hi = 3;
    std::int64_t denominator = 1; // endpoints are multiples of 1/denominator
    bool unbounded = true;        // may use -inf / +inf
    bool singletons = true;       // may produce isolated points
};

/// Random union in canonical form; may be empty.
IntervalUnion random_intervals(Rng& rng, const IntervalParams& p);

/// Every successor of an Adam vertex is an Eve vertex.
CountdownInstance random_countdown(Rng& rng, std::size_t vertices, Weight max_decrement, std::int64_t credit);

SubsetSumInstance random_subset_sum(Rng& rng, std::size_t pairs, std::uint64_t max_value);

} // namespace ivg::gen

#endif
