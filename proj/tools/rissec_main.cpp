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

// rissec command-line front end: run, presets, verify.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rissec/acceptance.hpp"
#include "rissec/config.hpp"
#include "rissec/csv.hpp"
#include "rissec/engine.hpp"
#include "rissec/overrides.hpp"
#include "rissec/presets.hpp"

#ifndef RISSEC_PRESETS_DIR
#define RISSEC_PRESETS_DIR "presets"
#endif

namespace fs = std::filesystem;
using namespace rissec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitCriterionFailed = 3;

constexpr const char* kOutDirEnv = "RISSEC_OUT_DIR";

struct RunArgs
{
    std::string scenario;
    std::vector<std::string> sets;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> trials;
    unsigned workers = 0;
    std::string out;
};

struct VerifyArgs
{
    std::int64_t trials = 2000;
    std::uint64_t seed = 20240601;
    unsigned workers = 0;
    std::vector<std::string> only;
    std::string presets_dir = RISSEC_PRESETS_DIR;
    bool allow_modified = false;
    bool list = false;
};

unsigned default_workers(unsigned requested)
{
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// A scenario argument is a readable file, or else the name of a shipped preset.
ScenarioFile load_scenario_argument(const std::string& arg)
{
    if (fs::is_regular_file(arg)) return load_scenario_file(arg);
    if (const auto name = preset_name_from_path(arg)) return preset(*name);
    throw IoError("cannot read scenario '" + arg + "'");
}

fs::path output_path(const RunArgs& a, const ScenarioFile& f)
{
    fs::path out = a.out.empty() ? fs::path("results") / ((f.name.empty() ? "run" : f.name) + ".csv") : fs::path(a.out);
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) out = fs::path(dir) / out.filename();
    return out;
}

int cmd_run(const RunArgs& a)
{
    const auto start = std::chrono::steady_clock::now();
    ScenarioFile f = load_scenario_argument(a.scenario);

    std::vector<std::pair<std::string, std::string>> applied;
    for (const auto& text : a.sets) {
        auto [key, value] = split_assignment(text);
        apply_file_override(f, key, value);
        applied.emplace_back(key, value);
    }
    if (a.seed) f.scenario.seed = *a.seed;
    if (a.trials) f.scenario.trials = *a.trials;

    const auto base = validate(f.scenario);
    const auto sw = effective_sweep(f);
    const unsigned workers = default_workers(a.workers);
    auto table = run_sweep(base, sw, f.c_target, RunOptions{workers});
    const std::string hash = scenario_hash(f);
    table.metadata.scenario_hash = hash;

    const auto csv_path = output_path(a, f);
    std::error_code ec;
    if (csv_path.has_parent_path()) fs::create_directories(csv_path.parent_path(), ec);
    save_text(csv_path, write_csv(table));

    std::int64_t failures = 0;
    nlohmann::ordered_json per_row = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        failures += row.nulling_failures;
        per_row.push_back(row.nulling_failures);
    }
    nlohmann::ordered_json overrides = nlohmann::ordered_json::object();
    for (const auto& [k, v] : applied)
        overrides[k] = v;

    const double runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::ordered_json summary{
        {"name", f.name},
        {"scenario_hash", hash},
        {"tool_version", table.metadata.tool_version},
        {"seed", table.metadata.seed},
        {"trials", table.metadata.trials},
        {"axis", table.metadata.axis},
        {"common_random_numbers", table.metadata.common_random_numbers},
        {"overrides", overrides},
        {"workers", workers},
        {"rows", table.rows.size()},
        {"prenull_failures", failures},
        {"prenull_failures_per_row", per_row},
        {"runtime_seconds", runtime},
        {"csv", csv_path.filename().string()},
    };
    fs::path summary_path = csv_path;
    summary_path.replace_extension(".summary.json");
    save_text(summary_path, summary.dump(2) + "\n");

    std::cout << "wrote " << csv_path.string() << " (" << table.rows.size() << " rows) and " << summary_path.string()
              << "\n";
    return kExitOk;
}

void print_preset(const ScenarioFile& f)
{
    const auto& s = f.scenario;
    const auto& t = s.topology;
    const auto& r = s.radio;
    std::printf("%-9s %s\n", f.name.c_str(), preset_hash(f.name).c_str());
    std::printf("          %s\n", f.description.c_str());
    std::printf("          d_v=%g d_tl=%g d_te=%g d_tr=%g (domain [%g, %g]) P=%g dBm sigma2=%g dBm C0=%g dB d0=%g gamma=%g\n",
                t.d_v, t.d_tl, t.d_te, t.d_tr, t.d_tr_min, t.d_tr_max, r.tx_power_dbm, r.noise_power_dbm, r.c0_db,
                r.d0, r.gamma);
    std::string amp = "ideal";
    if (const auto* p = std::get_if<PracticalAmplitude>(&s.ris.amplitude)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "practical(beta_min=%g, phi=%.6g, alpha=%g)", p->beta_min, p->phi, p->alpha);
        amp = buf;
    }
    std::printf("          N=%d model=%s b=%s strategy=%s trials=%lld seed=%llu c_target=%g\n", s.ris.n_elements,
                amp.c_str(), s.ris.quantization_bits ? std::to_string(*s.ris.quantization_bits).c_str() : "inf",
                strategy_name(s.strategy), static_cast<long long>(s.trials),
                static_cast<unsigned long long>(s.seed), f.c_target);
    if (const auto* an = std::get_if<AnPartitionStrategy>(&s.strategy))
        std::printf("          mu=%g rho=%g\n", an->mu, an->rho);
    if (f.sweep) {
        std::string values;
        for (const auto& v : f.sweep->values)
        {
            std::string text = to_string(v);
            if (const auto* x = std::get_if<double>(&v)) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%g", *x);
                text = buf;
            }
            values += (values.empty() ? "" : ",") + text;
        }
        std::printf("          sweep %s = {%s}, crn=%s, %zu series:", f.sweep->axis.c_str(), values.c_str(),
                    f.sweep->common_random_numbers ? "on" : "off", f.sweep->series.size());
        for (const auto& series : f.sweep->series) {
            std::string label;
            for (const auto& [k, v] : series.overrides)
                label += (label.empty() ? "" : ",") + k + "=" + v;
            std::printf(" [%s]", label.c_str());
        }
        std::printf("\n");
    }
}

int cmd_presets(const std::string& write_dir, const std::string& show)
{
    if (!show.empty()) {
        const auto name = preset_name_from_path(show);
        if (!name) throw OverrideError(show, "not a shipped preset");
        std::cout << serialize_scenario_file(preset(*name));
        return kExitOk;
    }
    for (const auto& name : preset_names())
        print_preset(preset(name));
    if (!write_dir.empty()) {
        std::error_code ec;
        fs::create_directories(write_dir, ec);
        for (const auto& name : preset_names())
            save_text(fs::path(write_dir) / (name + ".json"), serialize_scenario_file(preset(name)));
        std::cout << "wrote " << preset_names().size() << " presets to " << write_dir << "\n";
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a)
{
    if (a.list) {
        for (const auto& c : acceptance::criteria())
            std::cout << c.id << "  " << c.title << "\n";
        return kExitOk;
    }

    // Preset files on disk must match the shipped content unless explicitly allowed.
    std::map<std::string, ScenarioFile> on_disk;
    std::vector<std::string> modified;
    for (const auto& name : preset_names()) {
        const fs::path p = fs::path(a.presets_dir) / (name + ".json");
        if (!fs::is_regular_file(p)) continue;
        auto file = load_scenario_file(p);
        if (scenario_hash(file) != preset_hash(name)) modified.push_back(name);
        on_disk.emplace(name, std::move(file));
    }
    if (!modified.empty()) {
        std::string names;
        for (const auto& m : modified)
            names += (names.empty() ? "" : ", ") + m;
        if (!a.allow_modified) {
            std::cerr << "error: preset file(s) differ from the shipped content: " << names
                      << " (in " << a.presets_dir << "); pass --allow-modified to verify against them\n";
            return kExitInvalid;
        }
        std::cerr << "warning: verifying against modified preset(s): " << names << "\n";
    }

    acceptance::Options opts;
    opts.trials = a.trials;
    opts.seed = a.seed;
    opts.workers = default_workers(a.workers);
    opts.preset_source = [&on_disk](std::string_view name) {
        if (const auto it = on_disk.find(std::string(name)); it != on_disk.end()) return it->second;
        return preset(name);
    };
    for (const auto& id : a.only) {
        const auto& all = acceptance::criteria();
        if (std::none_of(all.begin(), all.end(), [&](const auto& c) { return c.id == id; }))
            throw OverrideError(id, "unknown criterion");
    }

    std::cout << "rissec " << tool_version() << " acceptance suite: " << a.trials << " trials/point, seed " << a.seed
              << ", " << opts.workers << " worker(s)\n";
    const auto results = acceptance::run(opts, a.only, [](const acceptance::CriterionResult& r) {
        std::cout << acceptance::format(r) << std::endl;
    });
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<std::ptrdiff_t>(results.size()) ? kExitOk : kExitCriterionFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rissec: Monte-Carlo secrecy simulator for RIS-assisted wiretap channels"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run a scenario or preset and write CSV plus summary");
    run->add_option("scenario", run_args.scenario, "Scenario file, or presets/<name>")->required();
    run->add_option("--set", run_args.sets, "Override a parameter, key=value (repeatable)");
    run->add_option("--seed", run_args.seed, "Master seed");
    run->add_option("--trials", run_args.trials, "Trials per sweep point")->check(CLI::PositiveNumber);
    run->add_option("--workers", run_args.workers, "Worker threads (default: hardware concurrency)");
    run->add_option("--out", run_args.out,
                    std::string("CSV output path (default results/<name>.csv; $") + kOutDirEnv +
                        " overrides the directory)");

    std::string write_dir, show;
    auto* presets = app.add_subcommand("presets", "List shipped presets and their frozen parameters");
    presets->add_option("--write", write_dir, "Also write every preset as <dir>/<name>.json");
    presets->add_option("--show", show, "Print one preset as a scenario file");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the reduced-trial acceptance suite");
    verify->add_option("--trials", verify_args.trials, "Trials per sweep point")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_args.seed, "Master seed")->capture_default_str();
    verify->add_option("--workers", verify_args.workers, "Worker threads (default: hardware concurrency)");
    verify->add_option("--only", verify_args.only, "Run only this criterion (repeatable)");
    verify->add_option("--presets-dir", verify_args.presets_dir, "Directory of preset files checked against the shipped hashes")
        ->capture_default_str();
    verify->add_flag("--allow-modified", verify_args.allow_modified, "Verify against edited preset files");
    verify->add_flag("--list", verify_args.list, "List criteria and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*run) return cmd_run(run_args);
        if (*presets) return cmd_presets(write_dir, show);
        if (*verify) return cmd_verify(verify_args);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ValidationError& e) {
        std::cerr << "error: invalid scenario\n";
        for (const auto& v : e.violations())
            std::cerr << "  " << v.field << ": " << v.reason << "\n";
        return kExitInvalid;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const OverrideError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
