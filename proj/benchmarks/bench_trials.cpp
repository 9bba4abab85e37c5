// SPDX-License-Identifier: Apache-2.0
//
// rissec: Monte-Carlo secrecy simulator for RIS-assisted wiretap channels
// Copyright (C) 2026 The rissec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Trial throughput per design strategy and element count.

#include <benchmark/benchmark.h>

#include "rissec/channel.hpp"
#include "rissec/engine.hpp"
#include "rissec/presets.hpp"
#include "rissec/ris.hpp"

using namespace rissec;

namespace {

Scenario with(int n, DesignStrategy strategy, std::optional<int> bits = std::nullopt)
{
    auto s = preset("baseline").scenario;
    s.ris.n_elements = n;
    s.strategy = strategy;
    s.ris.quantization_bits = bits;
    return s;
}

void run_batch(benchmark::State& state, const Scenario& s)
{
    const auto v = validate(s);
    constexpr std::int64_t trials = 256;
    for (auto _ : state) {
        auto batch = run_trials_parallel(v, trials, 1);
        benchmark::DoNotOptimize(batch.samples.data());
    }
    state.SetItemsProcessed(state.iterations() * trials);
}

void BM_DrawChannels(benchmark::State& state)
{
    const auto v = validate(with(static_cast<int>(state.range(0)), MatchedStrategy{}));
    std::uint64_t t = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(draw_channels(v, SubstreamKey{1, 0, t++}));
    state.SetItemsProcessed(state.iterations());
}

void BM_Matched(benchmark::State& state) { run_batch(state, with(static_cast<int>(state.range(0)), MatchedStrategy{})); }

void BM_MatchedQuantized(benchmark::State& state)
{
    run_batch(state, with(static_cast<int>(state.range(0)), MatchedStrategy{}, 3));
}

void BM_PreNull(benchmark::State& state) { run_batch(state, with(static_cast<int>(state.range(0)), PreNullStrategy{})); }

void BM_AnPartition(benchmark::State& state)
{
    run_batch(state, with(static_cast<int>(state.range(0)), AnPartitionStrategy{.mu = 0.5, .rho = 0.3}));
}

void BM_Aggregate(benchmark::State& state)
{
    const auto s = with(50, MatchedStrategy{});
    const auto samples = run_trials_parallel(validate(s), state.range(0), 1).samples;
    for (auto _ : state)
        benchmark::DoNotOptimize(aggregate(samples, 1.0, s));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_DrawChannels)->Arg(16)->Arg(100);
BENCHMARK(BM_Matched)->Arg(16)->Arg(50)->Arg(100);
BENCHMARK(BM_MatchedQuantized)->Arg(100);
BENCHMARK(BM_PreNull)->Arg(16)->Arg(32)->Arg(100);
BENCHMARK(BM_AnPartition)->Arg(100);
BENCHMARK(BM_Aggregate)->Arg(10000);

BENCHMARK_MAIN();
