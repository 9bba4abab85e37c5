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

#include <gtest/gtest.h>

#include <cmath>

#include "rissec/csv.hpp"
#include "rissec/engine.hpp"
#include "rissec/overrides.hpp"
#include "rissec/presets.hpp"

using namespace rissec;

namespace {

ScenarioFile small(std::string_view name, std::int64_t trials)
{
    auto f = preset(name);
    f.scenario.trials = trials;
    return f;
}

double sample_variance(const std::vector<double>& x)
{
    double m = 0.0;
    for (double v : x)
        m += v;
    m /= static_cast<double>(x.size());
    double s = 0.0;
    for (double v : x)
        s += (v - m) * (v - m);
    return s / (static_cast<double>(x.size()) - 1.0);
}

}  // namespace

TEST(Parallel, BatchIsIndependentOfWorkerCount)
{
    auto s = preset("baseline").scenario;
    s.strategy = PreNullStrategy{};
    s.ris.quantization_bits = 2;
    const auto v = validate(s);
    const auto one = run_trials_parallel(v, 700, 5, 0, RunOptions{1});
    const auto many = run_trials_parallel(v, 700, 5, 0, RunOptions{8});
    ASSERT_EQ(one.samples.size(), many.samples.size());
    for (std::size_t t = 0; t < one.samples.size(); ++t) {
        EXPECT_EQ(one.samples[t].c_s, many.samples[t].c_s);
        EXPECT_EQ(one.nulling[t].residual, many.nulling[t].residual);
    }
    EXPECT_EQ(one.nulling_failures, many.nulling_failures);
}

TEST(Parallel, TrialMatchesSequentialRun)
{
    const auto v = validate(preset("baseline").scenario);
    const auto batch = run_trials_parallel(v, 100, 9, 4, RunOptions{3});
    for (std::uint64_t t = 0; t < 100; t += 13)
        EXPECT_EQ(batch.samples[t].c_s, run_trial(v, SubstreamKey{9, 4, t}).c_s);
}

TEST(Sweep, WorkerCountDoesNotChangeCsvBytes)
{
    for (const char* name : {"fig8b", "fig10"}) {
        const auto f = small(name, 60);
        const auto v = validate(f.scenario);
        const auto a = write_csv(run_sweep(v, *f.sweep, f.c_target, RunOptions{1}));
        const auto b = write_csv(run_sweep(v, *f.sweep, f.c_target, RunOptions{8}));
        EXPECT_EQ(a, b) << name;
    }
}

TEST(Sweep, Fig8aShapeAndTrend)
{
    const auto f = small("fig8a", 400);
    const auto t = run_sweep(validate(f.scenario), *f.sweep, f.c_target);
    ASSERT_EQ(t.rows.size(), 80u);
    EXPECT_FALSE(t.metadata.common_random_numbers);
    EXPECT_EQ(t.metadata.axis, "N");
    // Ideal unquantized series: first value below last value.
    const auto& first = t.rows[3 * 10];
    const auto& last = t.rows[3 * 10 + 9];
    EXPECT_EQ(first.model, "ideal");
    EXPECT_FALSE(first.quantization_bits.has_value());
    EXPECT_LT(first.stats.mean_secrecy_rate, last.stats.mean_secrecy_rate);
}

TEST(Sweep, InvalidPointIsRejectedBeforeRunning)
{
    auto f = small("fig9a", 1000000000);
    f.sweep->values.push_back(25.0);  // outside the placement domain
    EXPECT_THROW(run_sweep(validate(f.scenario), *f.sweep, f.c_target), ValidationError);

    auto g = small("fig8a", 10);
    g.sweep->series.push_back({{{"gama", "3"}}});
    EXPECT_THROW(run_sweep(validate(g.scenario), *g.sweep, g.c_target), OverrideError);

    auto h = small("fig8a", 10);
    h.sweep->axis = "tx_power";
    EXPECT_THROW(run_sweep(validate(h.scenario), *h.sweep, h.c_target), OverrideError);
}

TEST(Sweep, CommonRandomNumbersReduceDifferenceVariance)
{
    // Per-trial c_s differences between neighbouring d_tr points of the placement sweep.
    auto f = small("fig9a", 2000);
    SweepSpec sw = *f.sweep;
    sw.series = {{{{"gamma", "3"}, {"b", "inf"}}}};
    const auto v = validate(f.scenario);
    for (std::size_t i = 0; i + 1 < sw.values.size(); i += 4) {
        const auto a = sweep_point(v.get(), sw, 0, i);
        const auto b = sweep_point(v.get(), sw, 0, i + 1);
        const auto a0 = run_trials_parallel(a, 2000, 3, 0);
        const auto b0 = run_trials_parallel(b, 2000, 3, 0);
        const auto b1 = run_trials_parallel(b, 2000, 3, i + 2);
        std::vector<double> crn, indep;
        for (std::size_t t = 0; t < 2000; ++t) {
            crn.push_back(b0.samples[t].c_s - a0.samples[t].c_s);
            indep.push_back(b1.samples[t].c_s - a0.samples[t].c_s);
        }
        EXPECT_LT(sample_variance(crn), sample_variance(indep)) << "d_tr index " << i;
    }
}

TEST(Sweep, PrenullFailureRateBelowOnePercent)
{
    auto s = preset("baseline").scenario;
    s.strategy = PreNullStrategy{};
    for (int n : {16, 32, 64}) {
        s.ris.n_elements = n;
        const auto batch = run_trials_parallel(validate(s), 2000, 17);
        EXPECT_LT(static_cast<double>(batch.nulling_failures) / 2000.0, 0.01) << "N=" << n;
    }
}

TEST(Sweep, StreamRule)
{
    // CRN on: every axis point shares trial draws; off: points differ.
    auto f = small("fig9a", 50);
    SweepSpec sw = *f.sweep;
    sw.series = {{{{"gamma", "3"}, {"b", "inf"}}}};
    sw.values = {10.0, 10.0};
    const auto v = validate(f.scenario);
    auto on = run_sweep(v, sw, 1.0);
    EXPECT_EQ(on.rows[0].stats.mean_secrecy_rate, on.rows[1].stats.mean_secrecy_rate);
    sw.common_random_numbers = false;
    auto off = run_sweep(v, sw, 1.0);
    EXPECT_NE(off.rows[0].stats.mean_secrecy_rate, off.rows[1].stats.mean_secrecy_rate);
}

TEST(Sweep, SeriesOverridesApplyBeforeAxis)
{
    auto f = small("fig10", 10);
    const auto p = sweep_point(f.scenario, *f.sweep, 5, 3);  // mu=0.5, b=2, rho=0.3
    const auto& an = std::get<AnPartitionStrategy>(p->strategy);
    EXPECT_DOUBLE_EQ(an.mu, 0.5);
    EXPECT_DOUBLE_EQ(an.rho, 0.3);
    EXPECT_EQ(p->ris.quantization_bits, 2);
}
