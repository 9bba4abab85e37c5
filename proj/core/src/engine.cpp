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

#include "rissec/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "rissec/channel.hpp"
#include "rissec/overrides.hpp"

#ifndef RISSEC_VERSION
#define RISSEC_VERSION "0.0.0"
#endif

namespace rissec {

const char* tool_version() { return RISSEC_VERSION; }

SecrecySample run_trial(const ValidatedScenario& point, const SubstreamKey& key, NullingDiagnostics* nulling,
                        int* degenerate)
{
    const auto ch = draw_channels(point, key);
    const auto outcome = design(point.get(), ch);
    if (nulling && outcome.nulling) {
        nulling->converged = outcome.nulling->converged;
        nulling->iterations = outcome.nulling->iterations;
        nulling->residual = outcome.nulling->residual;
        nulling->quantized_residual = outcome.quantized_residual;
    }
    if (degenerate) *degenerate = outcome.profile.degenerate_elements;
    return evaluate_trial(point, ch, outcome.profile);
}

TrialBatch run_trials_parallel(const ValidatedScenario& point, std::int64_t trials, std::uint64_t seed,
                               std::uint64_t stream, const RunOptions& opts)
{
    TrialBatch batch;
    if (trials <= 0) return batch;

    const auto n = static_cast<std::size_t>(trials);
    const bool nulling = std::holds_alternative<PreNullStrategy>(point->strategy);
    batch.samples.resize(n);
    std::vector<NullingDiagnostics> diag(n);
    std::vector<int> degenerate(n, 0);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        try {
            constexpr std::size_t chunk = 64;
            for (;;) {
                const std::size_t begin = next.fetch_add(chunk);
                if (begin >= n) break;
                const std::size_t end = std::min(n, begin + chunk);
                for (std::size_t t = begin; t < end; ++t) {
                    const SubstreamKey key{seed, stream, static_cast<std::uint64_t>(t)};
                    batch.samples[t] = run_trial(point, key, &diag[t], &degenerate[t]);
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(n);
        }
    };

    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t t = 0; t < n; ++t) {
        batch.degenerate_elements += degenerate[t];
        if (nulling && !diag[t].converged) ++batch.nulling_failures;
    }
    if (nulling) batch.nulling = std::move(diag);
    return batch;
}

std::string to_string(const SweepValue& v)
{
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v));
    return buf;
}

bool SweepSpec::operator==(const SweepSpec& o) const
{
    if (axis != o.axis || values != o.values || common_random_numbers != o.common_random_numbers) return false;
    if (series.size() != o.series.size()) return false;
    for (std::size_t i = 0; i < series.size(); ++i)
        if (series[i].overrides != o.series[i].overrides) return false;
    return true;
}

const std::vector<std::string>& sweep_axes()
{
    static const std::vector<std::string> axes{"N", "d_tr", "rho", "mu", "b", "gamma", "model"};
    return axes;
}

ValidatedScenario sweep_point(const Scenario& base, const SweepSpec& sw, std::size_t series_index,
                              std::size_t value_index)
{
    Scenario s = base;
    if (series_index < sw.series.size())
        for (const auto& [key, value] : sw.series[series_index].overrides)
            apply_override(s, key, value);
    apply_override(s, sw.axis, to_string(sw.values.at(value_index)));
    return validate(s);
}

ResultTable run_sweep(const ValidatedScenario& base, const SweepSpec& sw, double c_target, const RunOptions& opts)
{
    const auto& axes = sweep_axes();
    if (std::find(axes.begin(), axes.end(), sw.axis) == axes.end())
        throw OverrideError(sw.axis, "not a sweep axis");
    if (sw.values.empty()) throw ValidationError(std::vector<Violation>{{"sweep.values", "must not be empty"}});

    const std::size_t n_series = std::max<std::size_t>(1, sw.series.size());
    std::vector<ValidatedScenario> points;
    points.reserve(n_series * sw.values.size());
    for (std::size_t si = 0; si < n_series; ++si)
        for (std::size_t vi = 0; vi < sw.values.size(); ++vi)
            points.push_back(sweep_point(base.get(), sw, si, vi));

    ResultTable table;
    table.metadata.seed = base->seed;
    table.metadata.trials = base->trials;
    table.metadata.axis = sw.axis;
    table.metadata.common_random_numbers = sw.common_random_numbers;
    table.metadata.tool_version = tool_version();

    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto& point = points[p];
        const std::size_t value_index = p % sw.values.size();
        const std::uint64_t stream = sw.common_random_numbers ? 0 : value_index + 1;
        const auto batch = run_trials_parallel(point, point->trials, point->seed, stream, opts);

        ResultRow row;
        row.axis_value = sw.values[value_index];
        row.strategy = strategy_name(point->strategy);
        row.model = model_name(point->ris.amplitude);
        row.quantization_bits = point->ris.quantization_bits;
        row.gamma = point->radio.gamma;
        if (const auto* an = std::get_if<AnPartitionStrategy>(&point->strategy)) row.mu = an->mu;
        row.stats = aggregate(batch.samples, c_target, point.get());
        row.stats.secure_power = secure_power(batch.samples, point.get(), c_target);
        row.nulling_failures = batch.nulling_failures;
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace rissec
