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

#include "ivg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "ivg/error.hpp"

namespace ivg::oracle {

namespace {

constexpr std::uint64_t kProfileGuard = 1'000'000;

Rational mean(const Rational& sum, std::size_t len) { return sum / Rational(static_cast<std::int64_t>(len)); }

// Odometer over one choice per vertex of `who` (all vertices if nullopt);
// the other vertices keep their first edge.
class ChoiceOdometer {
public:
    ChoiceOdometer(const GameGraph& g, std::optional<Player> who) : g_(g), pos_(g.num_vertices(), 0)
    {
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (!who || g.owner(v) == *who) owned_.push_back(v);
        choice_.resize(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) choice_[v] = g.out_edges(v).front();
    }

    static std::uint64_t count(const GameGraph& g, std::optional<Player> who)
    {
        std::uint64_t total = 1;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (who && g.owner(v) != *who) continue;
            total *= g.out_edges(v).size();
            if (total > kProfileGuard) throw Error(ErrorKind::TooLarge, "too many positional strategies to enumerate");
        }
        return total;
    }

    const std::vector<EdgeId>& choice() const { return choice_; }

    bool next()
    {
        for (Vertex v : owned_) {
            const auto out = g_.out_edges(v);
            if (++pos_[v] < out.size()) {
                choice_[v] = out[pos_[v]];
                return true;
            }
            pos_[v] = 0;
            choice_[v] = out[0];
        }
        return false;
    }

private:
    const GameGraph& g_;
    std::vector<Vertex> owned_;
    std::vector<std::size_t> pos_;
    std::vector<EdgeId> choice_;
};

std::vector<EdgeId> merge(const GameGraph& g, const std::vector<EdgeId>& eve, const std::vector<EdgeId>& adam)
{
    std::vector<EdgeId> c(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) c[v] = g.owner(v) == Player::Eve ? eve[v] : adam[v];
    return c;
}

bool in_union(const IntervalUnion& i, const ExtendedRational& x)
{
    for (const Interval& piece : i.intervals())
        if (piece.contains(x)) return true;
    return false;
}

bool threshold_shaped(const IntervalUnion& i)
{
    return i.size() == 0 || (i.size() == 1 && (i.left_unbounded() || i.right_unbounded()));
}

// Strongly connected components over the allowed edges (Tarjan).
std::vector<int> components(const GameGraph& g, const std::vector<char>& allowed, int& count)
{
    const std::size_t n = g.num_vertices();
    std::vector<int> comp(n, -1), index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    int clock = 0;
    count = 0;
    std::function<void(Vertex)> visit = [&](Vertex v) {
        index[v] = low[v] = clock++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (EdgeId e : g.out_edges(v)) {
            if (!allowed[e]) continue;
            const Vertex u = g.edge(e).dst;
            if (index[u] < 0) {
                visit(u);
                low[v] = std::min(low[v], low[u]);
            } else if (on_stack[u]) {
                low[v] = std::min(low[v], index[u]);
            }
        }
        if (low[v] == index[v]) {
            Vertex u;
            do {
                u = stack.back();
                stack.pop_back();
                on_stack[u] = 0;
                comp[u] = count;
            } while (u != v);
            ++count;
        }
    };
    for (Vertex v = 0; v < n; ++v)
        if (index[v] < 0) visit(v);
    return comp;
}

struct Range {
    bool has_cycle = false;
    Rational lo, hi;
};

// [min, max] of the simple-cycle means inside each component.
std::vector<Range> cycle_mean_ranges(const GameGraph& g, const std::vector<char>& allowed, const std::vector<int>& comp,
                                     int count)
{
    if (g.num_vertices() > 10) throw Error(ErrorKind::TooLarge, "cycle enumeration is limited to 10 vertices");
    std::vector<Range> ranges(count);
    std::vector<char> on_path(g.num_vertices(), 0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        // cycles whose least vertex is s
        std::function<void(Vertex, Weight, std::size_t)> walk = [&](Vertex v, Weight sum, std::size_t len) {
            for (EdgeId e : g.out_edges(v)) {
                if (!allowed[e]) continue;
                const Edge& edge = g.edge(e);
                if (comp[edge.dst] != comp[s] || edge.dst < s) continue;
                if (edge.dst == s) {
                    const Rational m = mean(Rational(sum + edge.weight), len + 1);
                    Range& r = ranges[comp[s]];
                    if (!r.has_cycle) {
                        r = {true, m, m};
                    } else {
                        r.lo = std::min(r.lo, m);
                        r.hi = std::max(r.hi, m);
                    }
                    continue;
                }
                if (on_path[edge.dst]) continue;
                on_path[edge.dst] = 1;
                walk(edge.dst, sum + edge.weight, len + 1);
                on_path[edge.dst] = 0;
            }
        };
        walk(s, 0, 0);
    }
    return ranges;
}

// For each start vertex: ranges of every component with a cycle reachable over allowed edges.
std::vector<std::vector<int>> reachable_components(const GameGraph& g, const std::vector<char>& allowed,
                                                   const std::vector<int>& comp)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<int>> out(n);
    for (Vertex s = 0; s < n; ++s) {
        std::vector<char> seen(n, 0);
        std::vector<Vertex> todo{s};
        seen[s] = 1;
        while (!todo.empty()) {
            const Vertex v = todo.back();
            todo.pop_back();
            out[s].push_back(comp[v]);
            for (EdgeId e : g.out_edges(v)) {
                if (!allowed[e] || seen[g.edge(e).dst]) continue;
                seen[g.edge(e).dst] = 1;
                todo.push_back(g.edge(e).dst);
            }
        }
        std::sort(out[s].begin(), out[s].end());
        out[s].erase(std::unique(out[s].begin(), out[s].end()), out[s].end());
    }
    return out;
}

// Per vertex: whether the plays over `allowed` can reach a cycle-mean range
// that meets I (any_meets) or whether every reachable range lies inside I.
std::vector<bool> range_test(const GameGraph& g, const std::vector<char>& allowed, const IntervalUnion& i, bool all_inside)
{
    int count = 0;
    const std::vector<int> comp = components(g, allowed, count);
    const std::vector<Range> ranges = cycle_mean_ranges(g, allowed, comp, count);
    const auto reach = reachable_components(g, allowed, comp);
    std::vector<bool> out(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        bool result = all_inside;
        for (int c : reach[v]) {
            const Range& r = ranges[c];
            if (!r.has_cycle) continue;
            bool inside = false, meets = false;
            for (const Interval& piece : i.intervals()) {
                inside = inside || piece.contains_closed(r.lo, r.hi);
                meets = meets || piece.meets_closed(r.lo, r.hi);
            }
            if (all_inside && !inside) result = false;
            if (!all_inside && meets) result = true;
        }
        out[v] = result;
    }
    return out;
}

std::vector<char> allowed_by(const GameGraph& g, const std::vector<EdgeId>& choice, Player fixed)
{
    std::vector<char> allowed(g.num_edges(), 1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Vertex s = g.edge(e).src;
        if (g.owner(s) == fixed && choice[s] != e) allowed[e] = 0;
    }
    return allowed;
}

// Every cycle weighs 0 iff each component admits a potential with w(u,v) = p(v) - p(u).
bool all_cycles_zero(const GameGraph& g)
{
    const std::vector<char> all(g.num_edges(), 1);
    int count = 0;
    const std::vector<int> comp = components(g, all, count);
    std::vector<std::optional<std::int64_t>> pot(g.num_vertices());
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (pot[s]) continue;
        pot[s] = 0;
        std::vector<Vertex> todo{s};
        while (!todo.empty()) {
            const Vertex v = todo.back();
            todo.pop_back();
            auto relate = [&](Vertex u, std::int64_t value) {
                if (!pot[u]) {
                    pot[u] = value;
                    todo.push_back(u);
                    return true;
                }
                return *pot[u] == value;
            };
            for (EdgeId e : g.out_edges(v)) {
                const Edge& edge = g.edge(e);
                if (comp[edge.dst] == comp[v] && !relate(edge.dst, *pot[v] + edge.weight)) return false;
            }
            for (EdgeId e : g.in_edges(v)) {
                const Edge& edge = g.edge(e);
                if (comp[edge.src] == comp[v] && !relate(edge.src, *pot[v] - edge.weight)) return false;
            }
        }
    }
    return true;
}

Rational lasso_ds(std::span<const Weight> prefix, std::span<const Weight> cycle, const Rational& lambda)
{
    // sum_i lambda^i w_i over the prefix, then the cycle as a geometric series
    Rational head, f(1);
    for (Weight w : prefix) {
        head += f * Rational(w);
        f *= lambda;
    }
    Rational body, g(1);
    for (Weight w : cycle) {
        body += g * Rational(w);
        g *= lambda;
    }
    return head + f * body / (Rational(1) - g);
}

std::vector<Weight> weights_of(const GameGraph& g, const std::vector<EdgeId>& edges)
{
    std::vector<Weight> w;
    w.reserve(edges.size());
    for (EdgeId e : edges) w.push_back(g.edge(e).weight);
    return w;
}

} // namespace

ExtendedRational play_value(std::span<const Weight> prefix, std::span<const Weight> cycle, Payoff payoff,
                            const std::optional<Rational>& lambda)
{
    if (cycle.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
    Weight cycle_sum = 0;
    for (Weight w : cycle) cycle_sum += w;
    switch (payoff) {
    case Payoff::Liminf: return ExtendedRational(*std::min_element(cycle.begin(), cycle.end()));
    case Payoff::Limsup: return ExtendedRational(*std::max_element(cycle.begin(), cycle.end()));
    case Payoff::MpInf:
    case Payoff::MpSup: return ExtendedRational(mean(Rational(cycle_sum), cycle.size()));
    case Payoff::Discounted:
        if (!lambda) throw std::invalid_argument("discounted payoff needs lambda");
        return ExtendedRational(lasso_ds(prefix, cycle, *lambda));
    case Payoff::TotalInf:
    case Payoff::TotalSup: {
        if (cycle_sum > 0) return ExtendedRational::plus_inf();
        if (cycle_sum < 0) return ExtendedRational::minus_inf();
        Weight base = 0;
        for (Weight w : prefix) base += w;
        Weight run = 0;
        Weight extreme = payoff == Payoff::TotalInf ? std::numeric_limits<Weight>::max() : std::numeric_limits<Weight>::min();
        for (Weight w : cycle) {
            run += w;
            extreme = payoff == Payoff::TotalInf ? std::min(extreme, run) : std::max(extreme, run);
        }
        return ExtendedRational(base + extreme);
    }
    case Payoff::Parity: break;
    }
    throw std::invalid_argument("parity plays have no weight payoff");
}

ExtendedRational play_value(const GameGraph& g, const Lasso& l, Payoff payoff, const std::optional<Rational>& lambda)
{
    const auto p = weights_of(g, l.prefix), c = weights_of(g, l.cycle);
    return play_value(p, c, payoff, lambda);
}

std::uint32_t cycle_min_priority(const GameGraph& g, const Lasso& l, std::span<const std::uint32_t> priority)
{
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (EdgeId e : l.cycle) best = std::min(best, priority[g.edge(e).src]);
    return best;
}

Lasso induced_lasso(const GameGraph& g, Vertex start, std::span<const EdgeId> choice)
{
    std::vector<int> seen_at(g.num_vertices(), -1);
    std::vector<EdgeId> walk;
    Vertex v = start;
    while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(walk.size());
        walk.push_back(choice[v]);
        v = g.edge(choice[v]).dst;
    }
    Lasso l;
    l.prefix.assign(walk.begin(), walk.begin() + seen_at[v]);
    l.cycle.assign(walk.begin() + seen_at[v], walk.end());
    return l;
}

namespace {

// exists sigma forall tau: wins(lasso). Exact for positionally determined objectives.
template <class Wins>
Regions enumerate_pairs(const GameGraph& g, Wins&& wins)
{
    const std::size_t n = g.num_vertices();
    if (ChoiceOdometer::count(g, std::nullopt) > kProfileGuard)
        throw Error(ErrorKind::TooLarge, "too many strategy pairs to enumerate");
    Regions r(n);
    ChoiceOdometer eve(g, Player::Eve);
    do {
        std::vector<bool> good(n, true);
        ChoiceOdometer adam(g, Player::Adam);
        do {
            const std::vector<EdgeId> c = merge(g, eve.choice(), adam.choice());
            for (Vertex v = 0; v < n; ++v)
                if (good[v] && !wins(induced_lasso(g, v, c))) good[v] = false;
        } while (adam.next());
        for (Vertex v = 0; v < n; ++v)
            if (good[v]) r.eve.insert(v);
    } while (eve.next());
    r.adam = r.eve.complement();
    return r;
}

} // namespace

OracleRegions brute_force_positional(const GameGraph& g, const Objective& o)
{
    const IntervalUnion& i = o.intervals;
    auto by_value = [&](Payoff p) {
        return enumerate_pairs(g, [&](const Lasso& l) { return in_union(i, play_value(g, l, p)); });
    };
    switch (o.payoff) {
    case Payoff::Liminf:
    case Payoff::Limsup: return {by_value(o.payoff), false};
    case Payoff::MpInf:
    case Payoff::MpSup: {
        if (threshold_shaped(i)) return {by_value(o.payoff), false};
        // Eve positional, Adam arbitrary: a positional sigma wins from v iff
        // every cycle-mean range Adam can reach lies inside I.
        const std::size_t n = g.num_vertices();
        OracleRegions out{Regions(n), true};
        ChoiceOdometer::count(g, Player::Eve);
        ChoiceOdometer eve(g, Player::Eve);
        do {
            const auto good = range_test(g, allowed_by(g, eve.choice(), Player::Eve), i, true);
            for (Vertex v = 0; v < n; ++v)
                if (good[v]) out.regions.eve.insert(v);
        } while (eve.next());
        out.regions.adam = out.regions.eve.complement();
        return out;
    }
    case Payoff::TotalInf:
    case Payoff::TotalSup:
        if (threshold_shaped(i) || all_cycles_zero(g)) return {by_value(o.payoff), false};
        throw Error(ErrorKind::UnsupportedObjective, "no positional oracle for this total-sum objective");
    case Payoff::Discounted:
    case Payoff::Parity: break;
    }
    throw Error(ErrorKind::UnsupportedObjective, std::string("no positional oracle for payoff ") + to_string(o.payoff));
}

Regions brute_force_parity(const GameGraph& g, std::span<const std::uint32_t> priority)
{
    return enumerate_pairs(g, [&](const Lasso& l) { return cycle_min_priority(g, l, priority) % 2 == 0; });
}

std::vector<bool> one_player_mp_achievable(const GameGraph& g, const IntervalUnion& i)
{
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.owner(v) != Player::Eve) throw Error(ErrorKind::BadParameters, "one-player oracle needs an all-Eve arena");
    if (g.num_vertices() > 8) throw Error(ErrorKind::TooLarge, "one-player oracle is limited to 8 vertices");
    return range_test(g, std::vector<char>(g.num_edges(), 1), i, false);
}

Regions adam_positional_mp(const GameGraph& g, const IntervalUnion& i)
{
    const std::size_t n = g.num_vertices();
    Regions r(n);
    ChoiceOdometer::count(g, Player::Adam);
    ChoiceOdometer adam(g, Player::Adam);
    do {
        const auto eve_can = range_test(g, allowed_by(g, adam.choice(), Player::Adam), i, false);
        for (Vertex v = 0; v < n; ++v)
            if (!eve_can[v]) r.adam.insert(v);
    } while (adam.next());
    r.eve = r.adam.complement();
    return r;
}

DsFourValues ds_four_values(const GameGraph& g, const Rational& lambda)
{
    const std::size_t n = g.num_vertices();
    const std::uint64_t eves = ChoiceOdometer::count(g, Player::Eve), adams = ChoiceOdometer::count(g, Player::Adam);
    if (eves * adams > 100'000) throw Error(ErrorKind::TooLarge, "too many strategy pairs for the four values");

    auto values = [&](const std::vector<EdgeId>& c) {
        std::vector<Rational> val(n);
        for (Vertex v = 0; v < n; ++v) {
            const Lasso l = induced_lasso(g, v, c);
            val[v] = lasso_ds(weights_of(g, l.prefix), weights_of(g, l.cycle), lambda);
        }
        return val;
    };
    // table[s][t][v] for every Eve strategy s and Adam strategy t
    std::vector<std::vector<EdgeId>> eve_choices;
    std::vector<std::vector<std::vector<Rational>>> table;
    ChoiceOdometer eve(g, Player::Eve);
    do {
        eve_choices.push_back(eve.choice());
        table.emplace_back();
        ChoiceOdometer adam(g, Player::Adam);
        do table.back().push_back(values(merge(g, eve.choice(), adam.choice())));
        while (adam.next());
    } while (eve.next());

    auto against = [&](std::size_t s, Vertex v, bool maximize) {
        Rational best = table[s][0][v];
        for (const auto& row : table[s]) best = maximize ? std::max(best, row[v]) : std::min(best, row[v]);
        return best;
    };
    DsFourValues out;
    out.minmax.resize(n);
    out.maxmin.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        out.minmax[v] = against(0, v, false);
        out.maxmin[v] = against(0, v, true);
        for (std::size_t s = 1; s < table.size(); ++s) {
            out.minmax[v] = std::max(out.minmax[v], against(s, v, false));
            out.maxmin[v] = std::min(out.maxmin[v], against(s, v, true));
        }
    }
    // The extreme strategies pick, at each Eve vertex, the lowest-index edge
    // that attains the optimal value; against them Adam's other extreme is read off.
    auto extreme = [&](const std::vector<Rational>& opt) {
        std::vector<EdgeId> c(n);
        for (Vertex v = 0; v < n; ++v) {
            c[v] = g.out_edges(v).front();
            if (g.owner(v) != Player::Eve) continue;
            for (EdgeId e : g.out_edges(v)) {
                if (Rational(g.edge(e).weight) + lambda * opt[g.edge(e).dst] == opt[v]) {
                    c[v] = e;
                    break;
                }
            }
        }
        for (std::size_t s = 0; s < eve_choices.size(); ++s) {
            bool same = true;
            for (Vertex v = 0; v < n && same; ++v) same = g.owner(v) != Player::Eve || eve_choices[s][v] == c[v];
            if (same) return s;
        }
        throw std::logic_error("extreme strategy not enumerated");
    };
    const std::size_t smax = extreme(out.minmax), smin = extreme(out.maxmin);
    out.maxmax.resize(n);
    out.minmin.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        out.maxmax[v] = against(smax, v, true);
        out.minmin[v] = against(smin, v, false);
        if (against(smax, v, false) != out.minmax[v] || against(smin, v, true) != out.maxmin[v])
            throw std::logic_error("extreme strategy is not optimal");
    }
    return out;
}

Regions brute_force_finite_horizon_ds(const GameGraph& g, const Rational& lambda, const IntervalUnion& i,
                                      std::uint64_t depth, std::uint64_t node_limit)
{
    if (i.has_singleton_interval() || i.has_singleton_gap())
        throw Error(ErrorKind::SingletonNotSupported, "singleton intervals unsupported for discounted sum");
    const DsFourValues four = ds_four_values(g, lambda);
    Rational f(1);
    for (std::uint64_t k = 0; k < depth; ++k) f *= lambda;

    std::uint64_t nodes = 0;
    std::function<bool(Vertex, std::uint64_t, const Rational&, const Rational&)> eve_wins =
        [&](Vertex v, std::uint64_t k, const Rational& x, const Rational& factor) -> bool {
        if (++nodes > node_limit) throw Error(ErrorKind::TooLarge, "reference search exceeded its node limit");
        if (k == depth) {
            const Rational a_lo = x + f * four.minmax[v], a_hi = x + f * four.maxmax[v];
            const Rational b_lo = x + f * four.minmin[v], b_hi = x + f * four.maxmin[v];
            for (const Interval& piece : i.intervals())
                if (piece.contains_closed(a_lo, a_hi) || piece.contains_closed(b_lo, b_hi)) return true;
            return false;
        }
        const bool eve = g.owner(v) == Player::Eve;
        for (EdgeId e : g.out_edges(v)) {
            const Edge& edge = g.edge(e);
            if (eve_wins(edge.dst, k + 1, x + factor * Rational(edge.weight), factor * lambda) == eve) return eve;
        }
        return !eve;
    };
    Regions r(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        (eve_wins(v, 0, Rational(0), Rational(1)) ? r.eve : r.adam).insert(v);
    return r;
}

std::vector<bool> countdown_winner(const GameGraph& g, std::int64_t credit)
{
    const std::size_t n = g.num_vertices();
    if (credit < 0) throw Error(ErrorKind::BadParameters, "negative countdown credit");
    // win[c][v]: from v with counter c; every edge strictly lowers c
    std::vector<std::vector<char>> win(static_cast<std::size_t>(credit) + 1, std::vector<char>(n, 0));
    for (std::int64_t c = 0; c <= credit; ++c) {
        for (Vertex v = 0; v < n; ++v) {
            if (c == 0) {
                win[0][v] = 1;
                continue;
            }
            const bool eve = g.owner(v) == Player::Eve;
            bool result = !eve;
            for (EdgeId e : g.out_edges(v)) {
                const Edge& edge = g.edge(e);
                if (edge.weight >= 0) throw Error(ErrorKind::BadParameters, "countdown weights must be negative");
                const std::int64_t next = c + edge.weight;
                const bool won = next >= 0 && win[static_cast<std::size_t>(next)][edge.dst];
                if (won == eve) {
                    result = eve;
                    break;
                }
            }
            win[static_cast<std::size_t>(c)][v] = result ? 1 : 0;
        }
    }
    std::vector<bool> out(n);
    for (Vertex v = 0; v < n; ++v) out[v] = win[static_cast<std::size_t>(credit)][v] != 0;
    return out;
}

bool subset_sum_game(std::uint64_t target, std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs)
{
    // round k (from 1) belongs to Adam when k is odd
    std::function<bool(std::size_t, std::uint64_t)> eve_wins = [&](std::size_t k, std::uint64_t sum) -> bool {
        if (k == pairs.size()) return sum == target;
        const bool a = eve_wins(k + 1, sum + pairs[k].first), b = eve_wins(k + 1, sum + pairs[k].second);
        return k % 2 == 0 ? (a && b) : (a || b);
    };
    return eve_wins(0, 0);
}

} // namespace ivg::oracle
