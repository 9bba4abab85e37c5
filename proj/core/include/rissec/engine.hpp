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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rissec/ris.hpp"
#include "rissec/scenario.hpp"
#include "rissec/secrecy.hpp"

namespace rissec {

/// Per-trial pre-nulling diagnostics.
struct NullingDiagnostics
{
    bool converged = true;
    int iterations = 0;
    double residual = 0.0;            // leakage ratio at the end of the iteration
    double quantized_residual = 0.0;  // leakage ratio after phase quantization
};

struct TrialBatch
{
    std::vector<SecrecySample> samples;     // indexed by trial
    std::vector<NullingDiagnostics> nulling;  // empty unless the strategy is pre-nulling
    std::int64_t nulling_failures = 0;
    std::int64_t degenerate_elements = 0;
};

struct RunOptions
{
    unsigned workers = 1;
};

/// Runs trials 0 .. trials-1 of one scenario. Trial t draws from substream
/// (seed, stream, t); the batch is identical for any worker count.
TrialBatch run_trials_parallel(const ValidatedScenario& point, std::int64_t trials, std::uint64_t seed,
                               std::uint64_t stream = 0, const RunOptions& opts = {});

/// One trial: draw channels, design the profile (quantized if configured), evaluate.
SecrecySample run_trial(const ValidatedScenario& point, const SubstreamKey& key,
                        NullingDiagnostics* nulling = nullptr, int* degenerate = nullptr);

/// A value on a sweep axis: numeric, or a name such as "inf" / "practical".
using SweepValue = std::variant<double, std::string>;

std::string to_string(const SweepValue& v);

/// One curve in a sweep: overrides applied on top of the base scenario.
struct SweepSeries
{
    std::vector<std::pair<std::string, std::string>> overrides;
};

struct SweepSpec
{
    std::string axis = "N";  // N | d_tr | rho | mu | b | gamma | model
    std::vector<SweepValue> values;
    std::vector<SweepSeries> series;  // empty means a single series with no overrides
    bool common_random_numbers = true;

    bool operator==(const SweepSpec&) const;
};

const std::vector<std::string>& sweep_axes();

struct ResultRow
{
    SweepValue axis_value;
    std::string strategy;
    std::string model;
    std::optional<int> quantization_bits;
    double gamma = 0.0;
    std::optional<double> mu;
    SecrecyStats stats;
    std::int64_t nulling_failures = 0;
};

struct ResultMetadata
{
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    std::string axis;
    bool common_random_numbers = true;
    std::string scenario_hash;
    std::string tool_version;
};

struct ResultTable
{
    ResultMetadata metadata;
    std::vector<ResultRow> rows;
};

/// The scenario for one sweep point. Throws OverrideError or ValidationError.
ValidatedScenario sweep_point(const Scenario& base, const SweepSpec& sw, std::size_t series_index,
                              std::size_t value_index);

/// Runs every (series, axis value) point. With common random numbers every
/// point uses stream 0; otherwise the point at axis index i uses stream i + 1,
/// so series still share draws at the same axis value. All points are
/// validated before any trial runs.
ResultTable run_sweep(const ValidatedScenario& base, const SweepSpec& sw, double c_target,
                      const RunOptions& opts = {});

const char* tool_version();

}  // namespace rissec
