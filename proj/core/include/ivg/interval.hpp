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

#ifndef IVG_INTERVAL_HPP
#define IVG_INTERVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ivg/rational.hpp"

namespace ivg {

/// A nonempty real interval with rational or infinite endpoints.
/// Infinite endpoints are always open.
class Interval {
public:
    /// Throws Error(EmptyInterval) if the described set is empty.
    Interval(ExtendedRational lo, bool lo_open, ExtendedRational hi, bool hi_open);

    static Interval closed(Rational lo, Rational hi) { return {lo, false, hi, false}; }
    static Interval open(ExtendedRational lo, ExtendedRational hi) { return {lo, true, hi, true}; }
    static Interval singleton(const Rational& x) { return {x, false, x, false}; }
    static Interval at_least(const Rational& lo) { return {lo, false, ExtendedRational::plus_inf(), true}; }
    static Interval at_most(const Rational& hi) { return {ExtendedRational::minus_inf(), true, hi, false}; }
    static Interval greater_than(const Rational& lo) { return {lo, true, ExtendedRational::plus_inf(), true}; }
    static Interval less_than(const Rational& hi) { return {ExtendedRational::minus_inf(), true, hi, true}; }
    static Interval everything() { return open(ExtendedRational::minus_inf(), ExtendedRational::plus_inf()); }

    const ExtendedRational& lo() const { return lo_; }
    const ExtendedRational& hi() const { return hi_; }
    bool lo_open() const { return lo_open_; }
    bool hi_open() const { return hi_open_; }

    bool is_singleton() const { return lo_ == hi_; }
    bool is_bounded() const { return lo_.is_finite() && hi_.is_finite(); }
    /// hi - lo for bounded intervals.
    std::optional<Rational> width() const;

    bool contains(const ExtendedRational& x) const;
    /// True iff the closed interval [a, b] (a <= b) is a subset.
    bool contains_closed(const Rational& a, const Rational& b) const;
    /// True iff the closed interval [a, b] meets this interval.
    bool meets_closed(const Rational& a, const Rational& b) const;

    Interval negated() const;

    /// Bracket notation, e.g. "(0,1]" or "[2,inf)".
    std::string str() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    ExtendedRational lo_;
    ExtendedRational hi_;
    bool lo_open_;
    bool hi_open_;
};

/// Finite union of intervals in canonical form: sorted, pairwise disjoint,
/// and no two neighbours whose union is an interval.
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> pieces);
    IntervalUnion(std::initializer_list<Interval> pieces)
        : IntervalUnion(std::vector<Interval>(pieces)) {}

    static IntervalUnion everything() { return IntervalUnion({Interval::everything()}); }

    const std::vector<Interval>& intervals() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    bool empty() const { return pieces_.empty(); }
    bool is_everything() const;

    bool contains(const ExtendedRational& x) const;

    /// The canonical form of the set complement R \ I.
    IntervalUnion complement() const;
    /// {-x : x in I}.
    IntervalUnion negated() const;
    IntervalUnion unite(const IntervalUnion& other) const;

    /// inf I; minus_inf if left-unbounded. Precondition: !empty().
    const ExtendedRational& infimum() const;
    bool infimum_attained() const;

    bool has_singleton_interval() const;
    bool has_singleton_gap() const;
    bool right_unbounded() const { return !empty() && pieces_.back().hi().is_plus_inf(); }
    bool left_unbounded() const { return !empty() && pieces_.front().lo().is_minus_inf(); }

    /// Number of finite endpoints counted per interval (a singleton counts twice).
    std::size_t finite_endpoint_count() const;

    /// The bounded gaps between consecutive pieces.
    std::vector<Interval> bounded_gaps() const;
    /// Minimum width over bounded pieces and bounded gaps; nullopt if none.
    std::optional<Rational> min_bounded_width() const;

    std::string str() const;

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

private:
    std::vector<Interval> pieces_;
};

} // namespace ivg

#endif
