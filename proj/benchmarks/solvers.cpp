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


#include <benchmark/benchmark.h>

#include "ivg/discounted.hpp"
#include "ivg/meanpayoff.hpp"
#include "ivg/parity.hpp"
#include "ivg/random_instances.hpp"
#include "ivg/totalsum.hpp"

using namespace ivg;

namespace {

// fixed seeds so runs are comparable
constexpr std::uint64_t kSeed = 4242;

void BM_Parity(benchmark::State& state)
{
    gen::Rng rng(kSeed);
    const auto n = static_cast<std::size_t>(state.range(0));
    const ParityGame p = gen::random_parity(rng, n, 6, 3);
    for (auto _ : state) benchmark::DoNotOptimize(solve_parity(p));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Parity)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_MpInterval(benchmark::State& state)
{
    gen::Rng rng(kSeed);
    const GameGraph g = gen::random_arena(rng, {static_cast<std::size_t>(state.range(0)), 1, 3, 4});
    const IntervalUnion i({Interval(Rational(-1), true, Rational(1), false),
                           Interval(Rational(2), false, ExtendedRational::plus_inf(), true)});
    for (auto _ : state) benchmark::DoNotOptimize(solve_mp_interval(g, i));
}
BENCHMARK(BM_MpInterval)->RangeMultiplier(2)->Range(4, 64);

// Depth grows as the interval narrows; the arena stays small.
void BM_Discounted(benchmark::State& state)
{
    gen::Rng rng(kSeed);
    const GameGraph g = gen::random_arena(rng, {4, 2, 2, 2});
    const Rational w(1, state.range(0));
    const IntervalUnion i({Interval(Rational(0), false, w, false)});
    std::size_t depth = 0;
    for (auto _ : state) {
        const DsResult r = solve_ds_interval(g, Rational(1, 2), i);
        depth = r.depth;
        benchmark::DoNotOptimize(r);
    }
    state.counters["depth"] = static_cast<double>(depth);
}
BENCHMARK(BM_Discounted)->RangeMultiplier(2)->Range(1, 16);

void BM_TotalBounded(benchmark::State& state)
{
    gen::Rng rng(kSeed);
    const GameGraph g = gen::random_arena(rng, {5, 1, 2, 2});
    const IntervalUnion i = gen::random_intervals(rng, {2, -3, 3, 1, true, true});
    const auto b = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_total_interval(g, i, b));
}
BENCHMARK(BM_TotalBounded)->RangeMultiplier(2)->Range(4, 64);

} // namespace

BENCHMARK_MAIN();
