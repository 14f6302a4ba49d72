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

#include "ivg/interval.hpp"

#include <algorithm>

#include "ivg/error.hpp"

namespace ivg {

Interval::Interval(ExtendedRational lo, bool lo_open, ExtendedRational hi, bool hi_open)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_open_(lo_open), hi_open_(hi_open)
{
    if (!lo_.is_finite()) lo_open_ = true;
    if (!hi_.is_finite()) hi_open_ = true;
    if (lo_.is_plus_inf() || hi_.is_minus_inf())
        throw Error(ErrorKind::EmptyInterval, "empty interval " + str());
    if (hi_ < lo_ || (lo_ == hi_ && (lo_open_ || hi_open_)))
        throw Error(ErrorKind::EmptyInterval, "empty interval " + str());
}

std::optional<Rational> Interval::width() const
{
    if (!is_bounded()) return std::nullopt;
    return hi_.value() - lo_.value();
}

bool Interval::contains(const ExtendedRational& x) const
{
    // An infinite point belongs to an interval exactly when that side is unbounded.
    if (x.is_plus_inf()) return hi_.is_plus_inf();
    if (x.is_minus_inf()) return lo_.is_minus_inf();
    if (x < lo_ || (x == lo_ && lo_open_)) return false;
    if (x > hi_ || (x == hi_ && hi_open_)) return false;
    return true;
}

bool Interval::contains_closed(const Rational& a, const Rational& b) const
{
    return contains(a) && contains(b);
}

bool Interval::meets_closed(const Rational& a, const Rational& b) const
{
    const ExtendedRational ea(a), eb(b);
    if (eb < lo_ || (eb == lo_ && lo_open_)) return false;
    if (ea > hi_ || (ea == hi_ && hi_open_)) return false;
    return true;
}

Interval Interval::negated() const { return {hi_.negated(), hi_open_, lo_.negated(), lo_open_}; }

std::string Interval::str() const
{
    return std::string(lo_open_ ? "(" : "[") + lo_.str() + "," + hi_.str() + (hi_open_ ? ")" : "]");
}

IntervalUnion::IntervalUnion(std::vector<Interval> pieces)
{
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
        if (a.lo() != b.lo()) return a.lo() < b.lo();
        return !a.lo_open() && b.lo_open();
    });
    for (auto& next : pieces) {
        if (pieces_.empty()) {
            pieces_.push_back(std::move(next));
            continue;
        }
        Interval& cur = pieces_.back();
        const bool touches = next.lo() < cur.hi() || (next.lo() == cur.hi() && !(next.lo_open() && cur.hi_open()));
        if (!touches) {
            pieces_.push_back(std::move(next));
            continue;
        }
        ExtendedRational hi = cur.hi();
        bool hi_open = cur.hi_open();
        if (next.hi() > hi) {
            hi = next.hi();
            hi_open = next.hi_open();
        } else if (next.hi() == hi) {
            hi_open = hi_open && next.hi_open();
        }
        cur = Interval(cur.lo(), cur.lo_open(), hi, hi_open);
    }
}

bool IntervalUnion::is_everything() const
{
    return pieces_.size() == 1 && pieces_[0].lo().is_minus_inf() && pieces_[0].hi().is_plus_inf();
}

bool IntervalUnion::contains(const ExtendedRational& x) const
{
    return std::any_of(pieces_.begin(), pieces_.end(), [&](const Interval& i) { return i.contains(x); });
}

IntervalUnion IntervalUnion::complement() const
{
    std::vector<Interval> gaps;
    ExtendedRational lo = ExtendedRational::minus_inf();
    bool lo_open = true;
    for (const auto& p : pieces_) {
        if (!p.lo().is_minus_inf()) gaps.emplace_back(lo, lo_open, p.lo(), !p.lo_open());
        lo = p.hi();
        lo_open = !p.hi_open();
    }
    if (!lo.is_plus_inf()) gaps.emplace_back(lo, lo_open, ExtendedRational::plus_inf(), true);
    return IntervalUnion(std::move(gaps));
}

IntervalUnion IntervalUnion::negated() const
{
    std::vector<Interval> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back(p.negated());
    return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const
{
    std::vector<Interval> all = pieces_;
    all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
    return IntervalUnion(std::move(all));
}

const ExtendedRational& IntervalUnion::infimum() const
{
    if (empty()) throw std::logic_error("infimum of an empty interval union");
    return pieces_.front().lo();
}

bool IntervalUnion::infimum_attained() const { return !empty() && !pieces_.front().lo_open(); }

bool IntervalUnion::has_singleton_interval() const
{
    return std::any_of(pieces_.begin(), pieces_.end(), [](const Interval& i) { return i.is_singleton(); });
}

bool IntervalUnion::has_singleton_gap() const
{
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (pieces_[i].hi() == pieces_[i + 1].lo()) return true;
    return false;
}

std::size_t IntervalUnion::finite_endpoint_count() const
{
    std::size_t n = 0;
    for (const auto& p : pieces_) n += (p.lo().is_finite() ? 1 : 0) + (p.hi().is_finite() ? 1 : 0);
    return n;
}

std::vector<Interval> IntervalUnion::bounded_gaps() const
{
    std::vector<Interval> out;
    const IntervalUnion gaps = complement();
    for (const auto& g : gaps.intervals())
        if (g.is_bounded()) out.push_back(g);
    return out;
}

std::optional<Rational> IntervalUnion::min_bounded_width() const
{
    std::optional<Rational> best;
    auto consider = [&](const Interval& i) {
        if (auto w = i.width(); w && (!best || *w < *best)) best = *w;
    };
    for (const auto& p : pieces_) consider(p);
    for (const auto& g : bounded_gaps()) consider(g);
    return best;
}

std::string IntervalUnion::str() const
{
    if (pieces_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) s += " u ";
        s += pieces_[i].str();
    }
    return s;
}

} // namespace ivg
