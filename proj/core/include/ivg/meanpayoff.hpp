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


#ifndef IVG_MEANPAYOFF_HPP
#define IVG_MEANPAYOFF_HPP

#include "ivg/arena.hpp"
#include "ivg/parity.hpp"

namespace ivg {

enum class Comparison : std::uint8_t { GE, GT, LE, LT };

const char* to_string(Comparison c);

/// "Eve forces MP_inf ~ threshold".
struct ThresholdQuery {
    Rational threshold;
    Comparison cmp = Comparison::GE;
};

/// Exact regions with positional witnesses for both players, via small energy
/// progress measures on rescaled integer weights.
Regions mp_threshold(const GameGraph& g, const ThresholdQuery& q);

/// General interval union, by recursion on the number of finite endpoints.
/// Only regions are returned; Eve may need infinite memory here.
Regions solve_mp_interval(const GameGraph& g, const IntervalUnion& i);

/// Single interval. Returns Adam's positional strategy on his region.
Regions solve_mp_single(const GameGraph& g, const Interval& i);

/// Parity to mean-payoff with the three-vertex gadget per vertex. Original
/// vertex v keeps index v; its gadget (v0, v+, v-) is at |V| + 3v + {0,1,2}.
/// Throws Error(PriorityOutOfRange) unless every priority is in [0, |V|].
IntervalGame parity_to_mp(const ParityGame& p);

} // namespace ivg

#endif
