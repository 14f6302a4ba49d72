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

#include "ivg/discounted.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ivg/error.hpp"

namespace ivg {

namespace {

void check_lambda(const Rational& lambda)
{
    if (lambda.sign() <= 0 || lambda >= Rational(1))
        throw Error(ErrorKind::LambdaOutOfRange, "lambda " + lambda.str() + " is not in (0,1)");
}

} // namespace

Rational ds_value_lasso(std::span<const Weight> prefix, std::span<const Weight> cycle, const Rational& lambda)
{
    if (cycle.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
    Rational total, factor(1);
    for (Weight w : prefix) {
        total += factor * Rational(w);
        factor *= lambda;
    }
    Rational loop, f(1);
    for (Weight w : cycle) {
        loop += f * Rational(w);
        f *= lambda;
    }
    // f is now lambda^len(cycle)
    return total + factor * loop / (Rational(1) - f);
}

namespace {

// Values of the play from every vertex when each vertex v takes edge choice[v].
std::vector<Rational> profile_values(const GameGraph& g, const std::vector<EdgeId>& choice, const Rational& lambda)
{
    const std::size_t n = g.num_vertices();
    std::vector<Rational> val(n);
    std::vector<char> state(n, 0); // 0 new, 1 on the current path, 2 done
    std::vector<Vertex> path;
    std::vector<Weight> cyc;
    for (Vertex s = 0; s < n; ++s) {
        if (state[s] == 2) continue;
        path.clear();
        Vertex v = s;
        while (state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = g.edge(choice[v]).dst;
        }
        std::size_t stop = path.size();
        if (state[v] == 1) {
            // v closes a fresh cycle at path position `at`
            const std::size_t at = static_cast<std::size_t>(std::find(path.begin(), path.end(), v) - path.begin());
            cyc.clear();
            for (std::size_t k = at; k < path.size(); ++k) cyc.push_back(g.edge(choice[path[k]]).weight);
            val[v] = ds_value_lasso({}, cyc, lambda);
            state[v] = 2;
            for (std::size_t k = path.size() - 1; k > at; --k) {
                const Vertex u = path[k];
                val[u] = Rational(g.edge(choice[u]).weight) + lambda * val[g.edge(choice[u]).dst];
                state[u] = 2;
            }
            stop = at;
        }
        for (std::size_t k = stop; k-- > 0;) {
            const Vertex u = path[k];
            val[u] = Rational(g.edge(choice[u]).weight) + lambda * val[g.edge(choice[u]).dst];
            state[u] = 2;
        }
    }
    return val;
}

Rational edge_value(const GameGraph& g, EdgeId e, const std::vector<Rational>& val, const Rational& lambda)
{
    return Rational(g.edge(e).weight) + lambda * val[g.edge(e).dst];
}

// One round of greedy switching for `player` (maximizing or not). Returns
// true if some vertex changed its choice; switches only on strict gain.
bool improve(const GameGraph& g, Player player, bool maximize, std::vector<EdgeId>& choice,
             const std::vector<Rational>& val, const Rational& lambda)
{
    bool changed = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.owner(v) != player) continue;
        EdgeId best = choice[v];
        Rational best_val = val[v];
        for (EdgeId e : g.out_edges(v)) {
            const Rational x = edge_value(g, e, val, lambda);
            if (maximize ? x > best_val : x < best_val) {
                best = e;
                best_val = x;
            }
        }
        if (best != choice[v]) {
            choice[v] = best;
            changed = true;
        }
    }
    return changed;
}

std::vector<EdgeId> first_choices(const GameGraph& g)
{
    std::vector<EdgeId> c(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) c[v] = g.out_edges(v).front();
    return c;
}

// Adam's optimal response (policy iteration) with Eve's choices fixed in `choice`.
std::vector<Rational> best_response(const GameGraph& g, std::vector<EdgeId>& choice, bool adam_maximizes,
                                    const Rational& lambda)
{
    for (;;) {
        std::vector<Rational> val = profile_values(g, choice, lambda);
        if (!improve(g, Player::Adam, adam_maximizes, choice, val, lambda)) return val;
    }
}

// Two-player strategy iteration: Eve maximizes (or minimizes) against
// Adam's best response. Returns the game values and leaves Eve's final choices in `choice`.
std::vector<Rational> strategy_iteration(const GameGraph& g, std::vector<EdgeId>& choice, bool eve_maximizes,
                                         const Rational& lambda)
{
    for (;;) {
        std::vector<Rational> val = best_response(g, choice, !eve_maximizes, lambda);
        if (!improve(g, Player::Eve, eve_maximizes, choice, val, lambda)) return val;
    }
}

// Lowest-index Eve edge attaining the optimum of the values, at every Eve vertex.
PositionalStrategy canonical(const GameGraph& g, const std::vector<Rational>& val, const Rational& lambda,
                             std::vector<EdgeId>& choice)
{
    PositionalStrategy s(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.owner(v) != Player::Eve) continue;
        for (EdgeId e : g.out_edges(v)) {
            if (edge_value(g, e, val, lambda) == val[v]) {
                s.set(v, e);
                choice[v] = e;
                break;
            }
        }
        if (!s.defined(v)) throw std::logic_error("no optimal edge at " + g.name(v));
    }
    return s;
}

} // namespace

DsValueTable ds_optimal_values(const GameGraph& g, const Rational& lambda)
{
    check_lambda(lambda);
    DsValueTable t;

    std::vector<EdgeId> choice = first_choices(g);
    const std::vector<Rational> lower = strategy_iteration(g, choice, true, lambda);
    t.sigma_max = canonical(g, lower, lambda, choice);
    t.minmax = best_response(g, choice, false, lambda);
    t.maxmax = best_response(g, choice, true, lambda);

    choice = first_choices(g);
    const std::vector<Rational> upper = strategy_iteration(g, choice, false, lambda);
    t.sigma_min = canonical(g, upper, lambda, choice);
    t.maxmin = best_response(g, choice, true, lambda);
    t.minmin = best_response(g, choice, false, lambda);

    if (t.minmax != lower || t.maxmin != upper)
        throw std::logic_error("canonical extreme strategy changed the game value");
    return t;
}

std::uint64_t horizon(Weight max_abs, const Rational& lambda, const Rational& d)
{
    if (d.sign() <= 0) throw Error(ErrorKind::NonpositiveWidth, "interval width " + d.str() + " is not positive");
    check_lambda(lambda);
    if (max_abs == 0) return 0;
    const Rational span = Rational(2 * max_abs) / (Rational(1) - lambda);
    Rational term = lambda * span; // lambda^(n+1) * span for n = 0
    std::uint64_t n = 0;
    while (!(term < d)) {
        term *= lambda;
        ++n;
    }
    return n;
}

std::uint64_t horizon(const GameGraph& g, const Rational& lambda, const Rational& d)
{
    return horizon(max_abs_weight(g), lambda, d);
}

namespace {

struct NodeKey {
    Vertex v;
    std::uint64_t depth;
    Rational x;

    friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const
    {
        std::size_t h = k.x.hash();
        h ^= (static_cast<std::size_t>(k.v) * 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
        h ^= (static_cast<std::size_t>(k.depth) * 0xc2b2ae3d27d4eb4fULL) + (h << 6) + (h >> 2);
        return h;
    }
};

class DsSearch {
public:
    DsSearch(const GameGraph& g, const Rational& lambda, const IntervalUnion& i, std::uint64_t depth,
             const DsOptions& opts)
        : g_(g), pieces_(i.intervals()), depth_(depth), opts_(opts), table_(ds_optimal_values(g, lambda))
    {
        const Rational radius = Rational(max_abs_weight(g)) / (Rational(1) - lambda);
        pow_.push_back(Rational(1));
        for (std::uint64_t k = 0; k < depth_; ++k) pow_.push_back(pow_.back() * lambda);
        for (const auto& p : pow_) reach_.push_back(p * radius);
    }

    bool eve_wins(Vertex v, std::uint64_t k, const Rational& x)
    {
        if (opts_.prune) {
            const Rational lo = x - reach_[k], hi = x + reach_[k];
            bool meets = false;
            for (const Interval& piece : pieces_) {
                if (piece.contains_closed(lo, hi)) return true;
                meets = meets || piece.meets_closed(lo, hi);
            }
            if (!meets) return false;
        }
        if (k == depth_) return endgame(v, x);

        NodeKey key{v, k, x};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (++nodes_ > opts_.node_limit)
            throw Error(ErrorKind::TooLarge, "discounted search exceeded " + std::to_string(opts_.node_limit) + " nodes");

        const bool eve = g_.owner(v) == Player::Eve;
        bool result = !eve;
        for (EdgeId e : g_.out_edges(v)) {
            const Edge& edge = g_.edge(e);
            if (eve_wins(edge.dst, k + 1, x + pow_[k] * Rational(edge.weight)) == eve) {
                result = eve;
                break;
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool endgame(Vertex v, const Rational& x) const
    {
        const Rational& f = pow_[depth_];
        const Rational a_lo = x + f * table_.minmax[v], a_hi = x + f * table_.maxmax[v];
        const Rational b_lo = x + f * table_.minmin[v], b_hi = x + f * table_.maxmin[v];
        for (const Interval& piece : pieces_)
            if (piece.contains_closed(a_lo, a_hi) || piece.contains_closed(b_lo, b_hi)) return true;
        return false;
    }

    const GameGraph& g_;
    const std::vector<Interval>& pieces_;
    std::uint64_t depth_;
    DsOptions opts_;
    DsValueTable table_;
    std::vector<Rational> pow_;
    std::vector<Rational> reach_;
    std::unordered_map<NodeKey, bool, NodeKeyHash> memo_;
    std::uint64_t nodes_ = 0;
};

} // namespace

DsResult solve_ds_interval(const GameGraph& g, const Rational& lambda, const IntervalUnion& i, const DsOptions& opts)
{
    check_lambda(lambda);
    if (i.has_singleton_interval() || i.has_singleton_gap())
        throw Error(ErrorKind::SingletonNotSupported, "singleton intervals unsupported for discounted sum");

    const std::size_t n = g.num_vertices();
    DsResult out;
    out.regions = Regions(n);
    const auto d = i.min_bounded_width();
    out.horizon = d ? horizon(g, lambda, *d) : 0;
    out.depth = out.horizon + 1 + opts.extra_depth;

    DsSearch search(g, lambda, i, out.depth, opts);
    for (Vertex v = 0; v < n; ++v) {
        if (search.eve_wins(v, 0, Rational(0)))
            out.regions.eve.insert(v);
        else
            out.regions.adam.insert(v);
    }
    out.nodes = search.nodes();
    return out;
}

void SubsetSumInstance::validate() const
{
    if (pairs.empty()) throw Error(ErrorKind::BadParameters, "subset sum instance needs at least one pair");
}

DsReduction subset_sum_to_ds(const SubsetSumInstance& s, const Rational& lambda)
{
    s.validate();
    check_lambda(lambda);
    const std::size_t n = s.pairs.size();
    const mpz_class p = lambda.numerator(), q = lambda.denominator();

    auto power = [](const mpz_class& b, std::size_t e) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
        return r;
    };
    auto big = [](std::uint64_t x) {
        mpz_class r;
        mpz_import(r.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
        return r;
    };

    std::vector<Player> owners;
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n + 1; ++k) {
        owners.push_back(k % 2 == 0 ? Player::Eve : Player::Adam);
        names.push_back("v" + std::to_string(k));
    }
    std::vector<Edge> edges;
    for (std::size_t k = 1; k <= n; ++k) {
        // a / lambda^(k-1), times p^(n-1)
        const mpz_class factor = power(q, k - 1) * power(p, n - k);
        const auto [a, b] = s.pairs[k - 1];
        const Vertex src = static_cast<Vertex>(k - 1);
        edges.push_back({src, src + 1, to_int64(big(a) * factor)});
        edges.push_back({src, src + 1, to_int64(big(b) * factor)});
    }
    edges.push_back({static_cast<Vertex>(n), static_cast<Vertex>(n), 0});

    DsReduction r;
    r.scale = Rational(mpq_class(power(p, n - 1)));
    const Rational t = Rational(mpq_class(big(s.target)));
    r.intervals = IntervalUnion({Interval::open(r.scale * (t - Rational(1)), r.scale * (t + Rational(1)))});
    r.lambda = lambda;
    r.graph = GameGraph(std::move(owners), std::move(edges), 0, std::move(names));

    std::ostringstream c;
    c << "subset sum game, target " << s.target << ", pairs";
    for (const auto& [a, b] : s.pairs) c << " (" << a << "," << b << ")";
    c << "; weights and interval scaled by " << r.scale.str();
    r.comment = c.str();
    return r;
}

} // namespace ivg
