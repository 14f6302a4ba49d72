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


#ifndef IVG_LIMINF_HPP
#define IVG_LIMINF_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ivg/arena.hpp"
#include "ivg/parity.hpp"

namespace ivg {

/// Closed integer interval; a missing end is infinite.
struct IntegerInterval {
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;

    bool contains(std::int64_t n) const { return (!lo || *lo <= n) && (!hi || n <= *hi); }
    friend bool operator==(const IntegerInterval&, const IntegerInterval&) = default;
};

/// The integer points of an interval union, grouped into maximal runs.
/// Realizes the priority map n -> {1, ..., 2r+1}: even priorities mark the
/// runs, odd ones the gaps below, between and above them.
class PriorityMap {
public:
    PriorityMap() = default;
    explicit PriorityMap(std::vector<IntegerInterval> runs);

    const std::vector<IntegerInterval>& runs() const { return runs_; }
    std::size_t r() const { return runs_.size(); }
    bool empty() const { return runs_.empty(); }
    Priority max_priority() const { return static_cast<Priority>(2 * runs_.size() + 1); }

    /// Precondition: !empty().
    Priority omega(std::int64_t n) const;

    /// Bounds of the set of integers mapped to priority i; nullopt if that set
    /// is empty. Inner optionals are nullopt for infinite ends.
    struct Preimage {
        std::optional<std::int64_t> min;
        std::optional<std::int64_t> max;
    };
    std::optional<Preimage> preimage(Priority i) const;

    /// Back to a rational union of closed pieces.
    IntervalUnion to_intervals() const;

    friend bool operator==(const PriorityMap&, const PriorityMap&) = default;

private:
    std::vector<IntegerInterval> runs_;
};

/// I intersected with the integers, possibly empty. Endpoints beyond int64 throw TooLarge.
PriorityMap integer_points(const IntervalUnion& i);
/// As integer_points but throws Error(EmptyObjective) when no integer lies in I.
PriorityMap integerize(const IntervalUnion& i);

/// Every edge e is subdivided by an Eve vertex of priority omega(w(e)); the
/// original vertices keep their indices and get priority 2r+1. Parity edge e
/// (for e < |E|) is the first half of original edge e.
ParityGame liminf_to_parity(const GameGraph& g, const IntervalUnion& i);

/// Edge weights become the source priority; I is the set of even priorities present.
IntervalGame parity_to_liminf(const ParityGame& p);

/// Exact regions of the liminf objective with positional strategies for both players.
Regions solve_liminf(const GameGraph& g, const IntervalUnion& i);

} // namespace ivg

#endif
