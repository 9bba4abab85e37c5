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

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "rissec/config.hpp"
#include "rissec/csv.hpp"
#include "rissec/presets.hpp"

using namespace rissec;

namespace {

std::string replace_once(std::string text, const std::string& from, const std::string& to)
{
    const auto pos = text.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    if (pos != std::string::npos) text.replace(pos, from.size(), to);
    return text;
}

std::string config_error_key(const std::string& text)
{
    try {
        parse_scenario_file(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<no error>";
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST(ScenarioFile, PresetsRoundTrip)
{
    for (const auto& name : preset_names()) {
        const auto f = preset(name);
        const auto text = serialize_scenario_file(f);
        const auto back = parse_scenario_file(text);
        EXPECT_EQ(back, f) << name;
        EXPECT_EQ(serialize_scenario_file(back), text) << name;
    }
}

TEST(ScenarioFile, EveryFieldRoundTrips)
{
    ScenarioFile f;
    f.name = "custom";
    f.description = "all fields set";
    f.c_target = 0.25;
    auto& s = f.scenario;
    s.topology = Topology{.d_v = 7.5, .d_tl = 30.0, .d_te = 12.25, .d_tr = 33.0, .d_tr_min = 1.0, .d_tr_max = 40.0};
    s.radio = RadioParams{.tx_power_dbm = 13.3, .noise_power_dbm = -94.1, .c0_db = -31.5, .d0 = 2.0, .gamma = 2.7};
    s.ris = RisConfig{.n_elements = 2,
                      .amplitude = PracticalAmplitude{.beta_min = 0.2, .phi = 0.1 + 1e-13, .alpha = 1.7},
                      .quantization_bits = 4};
    s.strategy = AnPartitionStrategy{.mu = 0.35, .rho = 0.65, .phase_channel = AnPhaseChannel::InfoAntenna,
                                     .an_nulls_receiver = true};
    s.trials = 1234;
    s.seed = 18446744073709551557ull;
    s.channel_override = ExplicitChannels{{{1e-7, -2.5e-8}, {0.0, 1.0}},
                                          {{0.1, 0.2}, {0.3, 0.4}},
                                          {{1.0 / 3.0, 0.0}, {-0.0, 5.0}},
                                          {{6.0, 7.0}, {8.0, 9.0}}};
    SweepSpec sw;
    sw.axis = "model";
    sw.values = {std::string("ideal"), std::string("practical")};
    sw.common_random_numbers = false;
    sw.series = {{{{"b", "inf"}, {"gamma", "3.25"}}}, {{{"b", "2"}, {"an_nulls_receiver", "false"}}}};
    f.sweep = sw;

    const auto back = parse_scenario_file(serialize_scenario_file(f));
    EXPECT_EQ(back, f);

    f.scenario.strategy = PreNullStrategy{.tolerance = 3e-9, .max_iters = 77, .init = NullingInit::Matched};
    f.scenario.channel_override = UnitGainOverride{};
    f.sweep.reset();
    EXPECT_EQ(parse_scenario_file(serialize_scenario_file(f)), f);
}

TEST(ScenarioFile, UnknownKeysAreErrorsNamingThePath)
{
    const auto text = serialize_scenario_file(preset("fig8a"));
    EXPECT_EQ(config_error_key(replace_once(text, "\"beta_min\"", "\"beta_mim\"")),
              "ris.amplitude_model.beta_mim");
    EXPECT_EQ(config_error_key(replace_once(text, "\"gamma\": 3.0", "\"gamma\": 3.0, \"gama\": 3.5")), "radio.gama");
    EXPECT_EQ(config_error_key(replace_once(text, "\"schema_version\": 1", "\"schema_version\": 1, \"extra\": 0")),
              "extra");
}

TEST(ScenarioFile, TypeAndVersionErrors)
{
    const auto text = serialize_scenario_file(preset("baseline"));
    EXPECT_EQ(config_error_key(replace_once(text, "\"n_elements\": 50", "\"n_elements\": \"fifty\"")),
              "ris.n_elements");
    EXPECT_EQ(config_error_key(replace_once(text, "\"schema_version\": 1", "\"schema_version\": 2")),
              "schema_version");
    EXPECT_EQ(config_error_key(replace_once(text, "\"kind\": \"matched\"", "\"kind\": \"greedy\"")), "strategy.kind");
    EXPECT_THROW(parse_scenario_file("{ not json"), ConfigError);
    EXPECT_THROW(parse_scenario_file("[]"), ConfigError);
}

TEST(ScenarioFile, SeriesKeysAreChecked)
{
    const auto text = serialize_scenario_file(preset("fig10"));
    EXPECT_THROW(parse_scenario_file(replace_once(text, "\"mu\": 0.3", "\"nu\": 0.3")), ConfigError);
}

TEST(ScenarioFile, LoadAndSave)
{
    const auto dir = std::filesystem::temp_directory_path() / "rissec_config_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "fig9b.json";
    save_text(path, serialize_scenario_file(preset("fig9b")));
    EXPECT_EQ(load_scenario_file(path), preset("fig9b"));
    EXPECT_THROW(load_scenario_file(dir / "missing.json"), IoError);
    std::filesystem::remove_all(dir);
}

TEST(ScenarioFile, HashesAreStableAndSensitive)
{
    EXPECT_EQ(content_hash(""), "cbf29ce484222325");
    EXPECT_EQ(content_hash("a"), "af63dc4c8601ec8c");
    EXPECT_EQ(scenario_hash(preset("fig8a")), preset_hash("fig8a"));
    auto f = preset("fig8a");
    f.scenario.radio.gamma = 3.0000001;
    EXPECT_NE(scenario_hash(f), preset_hash("fig8a"));
}

TEST(FileOverride, WinsOverSeriesAndPinsAxis)
{
    auto f = preset("fig9b");
    apply_file_override(f, "gamma", "3.5");
    EXPECT_DOUBLE_EQ(f.scenario.radio.gamma, 3.5);
    for (const auto& series : f.sweep->series)
        for (const auto& [k, v] : series.overrides)
            if (k == "gamma") {
                EXPECT_EQ(v, "3.5");
            }

    apply_file_override(f, "d_tr", "12");
    ASSERT_EQ(f.sweep->values.size(), 1u);
    EXPECT_EQ(std::get<double>(f.sweep->values[0]), 12.0);

    apply_file_override(f, "c_target", "2.5");
    EXPECT_DOUBLE_EQ(f.c_target, 2.5);
    EXPECT_THROW(apply_file_override(f, "c_target", "x"), std::invalid_argument);
}

TEST(Presets, FrozenParameters)
{
    for (const auto& name : preset_names()) {
        const auto& s = preset(name).scenario;
        EXPECT_DOUBLE_EQ(s.topology.d_v, 10.0);
        EXPECT_DOUBLE_EQ(s.topology.d_tl, 20.0);
        EXPECT_DOUBLE_EQ(s.topology.d_te, 15.0);
        EXPECT_DOUBLE_EQ(s.radio.tx_power_dbm, 20.0);
        EXPECT_DOUBLE_EQ(s.radio.noise_power_dbm, -100.0);
        EXPECT_DOUBLE_EQ(s.radio.c0_db, -30.0);
        EXPECT_DOUBLE_EQ(s.radio.d0, 1.0);
        EXPECT_NO_THROW(validate(s)) << name;
    }
    const auto p = std::get<PracticalAmplitude>(preset("fig8a").scenario.ris.amplitude);
    EXPECT_DOUBLE_EQ(p.beta_min, 0.5);
    EXPECT_DOUBLE_EQ(p.phi, kPi / 2.0);
    EXPECT_DOUBLE_EQ(p.alpha, 2.0);

    const auto fig9a = preset("fig9a");
    EXPECT_EQ(fig9a.scenario.ris.n_elements, 50);
    EXPECT_EQ(std::get<double>(fig9a.sweep->values.front()), 5.0);
    EXPECT_EQ(std::get<double>(fig9a.sweep->values.back()), 19.0);

    const auto fig10 = preset("fig10");
    EXPECT_EQ(fig10.scenario.ris.n_elements, 100);
    EXPECT_DOUBLE_EQ(fig10.scenario.radio.gamma, 3.0);
    EXPECT_EQ(fig10.sweep->values.size(), 11u);
    std::set<std::string> mus;
    for (const auto& series : fig10.sweep->series)
        for (const auto& [k, v] : series.overrides)
            if (k == "mu") mus.insert(v);
    EXPECT_EQ(mus, (std::set<std::string>{"0.3", "0.5", "0.7"}));

    EXPECT_TRUE(std::holds_alternative<PreNullStrategy>(preset("fig8b").scenario.strategy));
    EXPECT_TRUE(std::holds_alternative<MatchedStrategy>(preset("fig8a").scenario.strategy));
    EXPECT_THROW(preset("fig11"), std::out_of_range);
    EXPECT_EQ(preset_name_from_path("presets/fig10.json"), "fig10");
    EXPECT_EQ(preset_name_from_path("presets/fig8a"), "fig8a");
    EXPECT_FALSE(preset_name_from_path("presets/other").has_value());
}

TEST(Csv, HeaderAndRowFormat)
{
    EXPECT_EQ(csv_header(),
              "axis,strategy,model,quantization,gamma,mu,c_target,mean_cs,ci_low,ci_high,sop,intercept,spsc,coverage,"
              "see,secure_power_dbm,prenull_failures,trials,seed");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
    EXPECT_EQ(format_number(12345678901.0), "1.23456789e+10");
    EXPECT_EQ(format_number(0.5), "0.5");

    auto f = preset("fig10");
    f.scenario.trials = 20;
    f.sweep->values = {0.0, 0.5};
    f.sweep->series = {{{{"mu", "0.3"}, {"b", "inf"}}}, {{{"mu", "0.7"}, {"b", "2"}}}};
    const auto csv = write_csv(run_sweep(validate(f.scenario), *f.sweep, f.c_target));
    const auto rows = lines(csv);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0], csv_header());
    EXPECT_EQ(rows[1].rfind("0,an_partition,ideal,inf,3,0.3,1,", 0), 0u) << rows[1];
    EXPECT_EQ(rows[4].rfind("0.5,an_partition,ideal,2,3,0.7,1,", 0), 0u) << rows[4];
    EXPECT_NE(rows[1].find(",20,20240601"), std::string::npos);
    for (const auto& r : rows)
        EXPECT_EQ(std::count(r.begin(), r.end(), ','), 18);
}

TEST(Csv, MatchedRowsLeaveMuEmptyAndReportUnattainablePower)
{
    auto f = preset("baseline");
    f.scenario.trials = 20;
    f.c_target = 40.0;
    const auto csv = write_csv(run_sweep(validate(f.scenario), effective_sweep(f), f.c_target));
    const auto row = lines(csv).at(1);
    EXPECT_EQ(row.rfind("50,matched,ideal,inf,3,,40,", 0), 0u) << row;
    EXPECT_NE(row.find(",unattainable,"), std::string::npos) << row;
}
