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

#include "rissec/presets.hpp"

#include <stdexcept>

namespace rissec {
namespace {

// Fixed experiment geometry and radio constants.
Scenario baseline_scenario()
{
    Scenario s;
    s.topology = Topology{.d_v = 10.0, .d_tl = 20.0, .d_te = 15.0, .d_tr = 10.0, .d_tr_min = 5.0, .d_tr_max = 19.0};
    s.radio = RadioParams{.tx_power_dbm = 20.0, .noise_power_dbm = -100.0, .c0_db = -30.0, .d0 = 1.0, .gamma = 3.0};
    s.ris.n_elements = 50;
    s.ris.amplitude = IdealAmplitude{};
    s.strategy = MatchedStrategy{};
    s.trials = 10000;
    s.seed = 20240601;
    return s;
}

const PracticalAmplitude kPracticalModel{.beta_min = 0.5, .phi = kPi / 2.0, .alpha = 2.0};

std::vector<SweepValue> range_values(double first, double last, double step)
{
    std::vector<SweepValue> v;
    const auto count = static_cast<int>((last - first) / step + 0.5);
    for (int i = 0; i <= count; ++i)
        v.emplace_back(first + i * step);
    return v;
}

std::vector<SweepValue> rho_grid()
{
    // Literal decimals so every grid point is the nearest double to k/10.
    return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
}

std::vector<SweepSeries> cross(const std::string& key_a, const std::vector<std::string>& values_a,
                               const std::string& key_b, const std::vector<std::string>& values_b)
{
    std::vector<SweepSeries> out;
    for (const auto& a : values_a)
        for (const auto& b : values_b)
            out.push_back({{{key_a, a}, {key_b, b}}});
    return out;
}

const std::vector<std::string> kQuantLevels{"1", "2", "3", "inf"};

ScenarioFile make_baseline()
{
    ScenarioFile f;
    f.name = "baseline";
    f.description = "Line topology, matched design, N=50, d_tr=10 m, gamma=3.0";
    f.scenario = baseline_scenario();
    return f;
}

ScenarioFile make_fig8(bool prenull)
{
    ScenarioFile f;
    f.name = prenull ? "fig8b" : "fig8a";
    f.description = prenull ? "Secrecy rate vs N, pre-nulling (eavesdropper CSI known), ideal and practical RIS"
                            : "Secrecy rate vs N, matched design (eavesdropper CSI unknown), ideal and practical RIS";
    f.scenario = baseline_scenario();
    if (prenull) f.scenario.strategy = PreNullStrategy{};
    f.scenario.ris.amplitude = kPracticalModel;

    SweepSpec sw;
    sw.axis = "N";
    sw.values = range_values(10.0, 100.0, 10.0);
    sw.common_random_numbers = false;
    sw.series = cross("model", {"ideal", "practical"}, "b", kQuantLevels);
    f.sweep = sw;
    return f;
}

ScenarioFile make_fig9(bool prenull)
{
    ScenarioFile f;
    f.name = prenull ? "fig9b" : "fig9a";
    f.description = prenull ? "Secrecy rate vs RIS position d_tr, pre-nulling, N=50, gamma in {3.0, 3.5}"
                            : "Secrecy rate vs RIS position d_tr, matched design, N=50, gamma in {3.0, 3.5}";
    f.scenario = baseline_scenario();
    if (prenull) f.scenario.strategy = PreNullStrategy{};
    f.scenario.ris.n_elements = 50;

    SweepSpec sw;
    sw.axis = "d_tr";
    sw.values = range_values(5.0, 19.0, 1.0);
    sw.common_random_numbers = true;
    sw.series = cross("gamma", {"3", "3.5"}, "b", kQuantLevels);
    f.sweep = sw;
    return f;
}

ScenarioFile make_fig10()
{
    ScenarioFile f;
    f.name = "fig10";
    f.description = "Secrecy rate vs AN element ratio rho, N=100, gamma=3.0, mu in {0.3, 0.5, 0.7}";
    f.scenario = baseline_scenario();
    f.scenario.ris.n_elements = 100;
    f.scenario.strategy = AnPartitionStrategy{.mu = 0.5, .rho = 0.0};

    SweepSpec sw;
    sw.axis = "rho";
    sw.values = rho_grid();
    sw.common_random_numbers = true;
    sw.series = cross("mu", {"0.3", "0.5", "0.7"}, "b", kQuantLevels);
    f.sweep = sw;
    return f;
}

}  // namespace

const std::vector<std::string>& preset_names()
{
    static const std::vector<std::string> names{"baseline", "fig8a", "fig8b", "fig9a", "fig9b", "fig10"};
    return names;
}

ScenarioFile preset(std::string_view name)
{
    if (name == "baseline") return make_baseline();
    if (name == "fig8a") return make_fig8(false);
    if (name == "fig8b") return make_fig8(true);
    if (name == "fig9a") return make_fig9(false);
    if (name == "fig9b") return make_fig9(true);
    if (name == "fig10") return make_fig10();
    throw std::out_of_range("unknown preset '" + std::string(name) + "'");
}

std::string preset_hash(std::string_view name) { return scenario_hash(preset(name)); }

std::optional<std::string> preset_name_from_path(std::string_view path)
{
    std::string_view p = path;
    if (p.starts_with("presets/")) p.remove_prefix(8);
    if (p.ends_with(".json")) p.remove_suffix(5);
    for (const auto& n : preset_names())
        if (p == n) return n;
    return std::nullopt;
}

}  // namespace rissec
