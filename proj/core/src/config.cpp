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

#include "rissec/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rissec/overrides.hpp"

namespace rissec {
namespace {

using Json = nlohmann::ordered_json;

/// Reads one JSON object, remembering which keys were consumed so the rest
/// can be reported as unknown.
class Section
{
  public:
    Section(const Json& j, std::string path) : json_(j), path_(std::move(path))
    {
        if (!json_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    std::string key_path(std::string_view key) const
    {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    const Json* find(std::string_view key)
    {
        seen_.insert(std::string(key));
        auto it = json_.find(std::string(key));
        return it == json_.end() ? nullptr : &*it;
    }

    double number(std::string_view key, double fallback)
    {
        const Json* v = find(key);
        if (!v) return fallback;
        if (!v->is_number()) throw ConfigError(key_path(key), "expected a number");
        return v->get<double>();
    }

    template <typename Int>
    Int integer(std::string_view key, Int fallback)
    {
        const Json* v = find(key);
        if (!v) return fallback;
        if (!v->is_number_integer()) throw ConfigError(key_path(key), "expected an integer");
        if constexpr (std::is_unsigned_v<Int>) {
            if (v->is_number_unsigned()) return static_cast<Int>(v->get<std::uint64_t>());
            if (v->get<std::int64_t>() < 0) throw ConfigError(key_path(key), "must not be negative");
        }
        return static_cast<Int>(v->get<std::int64_t>());
    }

    std::string string(std::string_view key, std::string fallback)
    {
        const Json* v = find(key);
        if (!v) return fallback;
        if (!v->is_string()) throw ConfigError(key_path(key), "expected a string");
        return v->get<std::string>();
    }

    bool boolean(std::string_view key, bool fallback)
    {
        const Json* v = find(key);
        if (!v) return fallback;
        if (!v->is_boolean()) throw ConfigError(key_path(key), "expected true or false");
        return v->get<bool>();
    }

    std::optional<Section> child(std::string_view key)
    {
        const Json* v = find(key);
        if (!v) return std::nullopt;
        return Section(*v, key_path(key));
    }

    void finish() const
    {
        for (auto it = json_.begin(); it != json_.end(); ++it)
            if (!seen_.count(it.key())) throw ConfigError(key_path(it.key()), "unknown key");
    }

  private:
    const Json& json_;
    std::string path_;
    std::set<std::string> seen_;
};

[[noreturn]] void bad_choice(const std::string& path, const std::string& got, const char* expected)
{
    throw ConfigError(path, "expected " + std::string(expected) + ", got '" + got + "'");
}

ComplexVector read_complex_vector(const Json& j, const std::string& path)
{
    if (!j.is_array()) throw ConfigError(path, "expected an array of [re, im] pairs");
    ComplexVector out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ConfigError(path, "expected an array of [re, im] pairs");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

Json write_complex_vector(const ComplexVector& v)
{
    Json arr = Json::array();
    for (const auto& z : v)
        arr.push_back(Json::array({z.real(), z.imag()}));
    return arr;
}

std::string scalar_to_text(const Json& v, const std::string& path)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    // Shortest text that reads back to the same double.
    if (v.is_number()) return v.dump();
    throw ConfigError(path, "expected a number, string or boolean");
}

Json text_to_scalar(const std::string& text)
{
    if (text == "true") return true;
    if (text == "false") return false;
    // Numbers that survive a round trip are written as numbers.
    char* end = nullptr;
    const double x = std::strtod(text.c_str(), &end);
    if (!text.empty() && end == text.c_str() + text.size() && std::isfinite(x)) {
        if (text.find_first_of(".eE") == std::string::npos) {
            try {
                return Json(std::stoll(text));
            } catch (const std::out_of_range&) {
            }
        }
        return x;
    }
    return text;
}

void read_topology(Section sec, Topology& t)
{
    t.d_v = sec.number("d_v", t.d_v);
    t.d_tl = sec.number("d_tl", t.d_tl);
    t.d_te = sec.number("d_te", t.d_te);
    t.d_tr = sec.number("d_tr", t.d_tr);
    if (const Json* dom = sec.find("d_tr_domain")) {
        if (!dom->is_array() || dom->size() != 2 || !(*dom)[0].is_number() || !(*dom)[1].is_number())
            throw ConfigError(sec.key_path("d_tr_domain"), "expected [min, max]");
        t.d_tr_min = (*dom)[0].get<double>();
        t.d_tr_max = (*dom)[1].get<double>();
    }
    sec.finish();
}

void read_radio(Section sec, RadioParams& r)
{
    r.tx_power_dbm = sec.number("tx_power_dbm", r.tx_power_dbm);
    r.noise_power_dbm = sec.number("noise_power_dbm", r.noise_power_dbm);
    r.c0_db = sec.number("c0_db", r.c0_db);
    r.d0 = sec.number("d0", r.d0);
    r.gamma = sec.number("gamma", r.gamma);
    sec.finish();
}

void read_ris(Section sec, RisConfig& ris)
{
    ris.n_elements = sec.integer<int>("n_elements", ris.n_elements);
    if (auto model = sec.child("amplitude_model")) {
        const auto kind = model->string("kind", "ideal");
        if (kind == "ideal") {
            ris.amplitude = IdealAmplitude{};
        } else if (kind == "practical") {
            PracticalAmplitude p;
            p.beta_min = model->number("beta_min", p.beta_min);
            p.phi = model->number("phi", p.phi);
            p.alpha = model->number("alpha", p.alpha);
            ris.amplitude = p;
        } else {
            bad_choice(model->key_path("kind"), kind, "ideal or practical");
        }
        model->finish();
    }
    if (const Json* q = sec.find("quantization_bits")) {
        if (q->is_null())
            ris.quantization_bits.reset();
        else if (q->is_number_integer())
            ris.quantization_bits = q->get<int>();
        else
            throw ConfigError(sec.key_path("quantization_bits"), "expected an integer or null");
    }
    sec.finish();
}

DesignStrategy read_strategy(Section sec)
{
    const auto kind = sec.string("kind", "matched");
    DesignStrategy out;
    if (kind == "matched") {
        out = MatchedStrategy{};
    } else if (kind == "prenull") {
        PreNullStrategy p;
        p.tolerance = sec.number("tolerance", p.tolerance);
        p.max_iters = sec.integer<int>("max_iters", p.max_iters);
        const auto init = sec.string("init", "spread");
        if (init == "spread")
            p.init = NullingInit::Spread;
        else if (init == "matched")
            p.init = NullingInit::Matched;
        else
            bad_choice(sec.key_path("init"), init, "spread or matched");
        out = p;
    } else if (kind == "an_partition") {
        AnPartitionStrategy a;
        a.mu = sec.number("mu", a.mu);
        a.rho = sec.number("rho", a.rho);
        const auto ch = sec.string("an_phase_channel", "an_antenna");
        if (ch == "an_antenna")
            a.phase_channel = AnPhaseChannel::AnAntenna;
        else if (ch == "info_antenna")
            a.phase_channel = AnPhaseChannel::InfoAntenna;
        else
            bad_choice(sec.key_path("an_phase_channel"), ch, "an_antenna or info_antenna");
        a.an_nulls_receiver = sec.boolean("an_nulls_receiver", a.an_nulls_receiver);
        out = a;
    } else {
        bad_choice(sec.key_path("kind"), kind, "matched, prenull or an_partition");
    }
    sec.finish();
    return out;
}

ChannelOverride read_override(Section sec)
{
    const auto kind = sec.string("kind", "");
    if (kind == "unit_gain") {
        sec.finish();
        return UnitGainOverride{};
    }
    if (kind != "explicit") bad_choice(sec.key_path("kind"), kind, "unit_gain or explicit");
    ExplicitChannels e;
    for (auto [key, dest] : {std::pair{"h", &e.h}, {"h_an", &e.h_an}, {"g", &e.g}, {"k", &e.k}}) {
        if (const Json* v = sec.find(key)) *dest = read_complex_vector(*v, sec.key_path(key));
    }
    sec.finish();
    return e;
}

SweepSpec read_sweep(Section sec)
{
    SweepSpec sw;
    sw.axis = sec.string("axis", sw.axis);
    const auto& axes = sweep_axes();
    if (std::find(axes.begin(), axes.end(), sw.axis) == axes.end())
        bad_choice(sec.key_path("axis"), sw.axis, "one of N, d_tr, rho, mu, b, gamma, model");
    if (const Json* values = sec.find("values")) {
        if (!values->is_array()) throw ConfigError(sec.key_path("values"), "expected an array");
        for (const auto& v : *values) {
            if (v.is_number())
                sw.values.emplace_back(v.get<double>());
            else if (v.is_string())
                sw.values.emplace_back(v.get<std::string>());
            else
                throw ConfigError(sec.key_path("values"), "expected numbers or names");
        }
    }
    sw.common_random_numbers = sec.boolean("common_random_numbers", sw.common_random_numbers);
    if (const Json* series = sec.find("series")) {
        if (!series->is_array()) throw ConfigError(sec.key_path("series"), "expected an array of objects");
        for (std::size_t i = 0; i < series->size(); ++i) {
            const auto& obj = (*series)[i];
            const auto path = sec.key_path("series") + "[" + std::to_string(i) + "]";
            if (!obj.is_object()) throw ConfigError(path, "expected an object");
            SweepSeries s;
            for (auto it = obj.begin(); it != obj.end(); ++it) {
                const auto& keys = override_keys();
                if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
                    throw ConfigError(path + "." + it.key(), "unknown key");
                s.overrides.emplace_back(it.key(), scalar_to_text(it.value(), path + "." + it.key()));
            }
            sw.series.push_back(std::move(s));
        }
    }
    sec.finish();
    return sw;
}

}  // namespace

ScenarioFile parse_scenario_file(std::string_view text)
{
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }

    Section sec(root, "");
    ScenarioFile f;
    f.schema_version = sec.integer<int>("schema_version", -1);
    if (f.schema_version != kSchemaVersion)
        throw ConfigError("schema_version", "unsupported version " + std::to_string(f.schema_version));
    f.name = sec.string("name", "");
    f.description = sec.string("description", "");

    Scenario& s = f.scenario;
    if (auto t = sec.child("topology")) read_topology(*t, s.topology);
    if (auto r = sec.child("radio")) read_radio(*r, s.radio);
    if (auto r = sec.child("ris")) read_ris(*r, s.ris);
    if (auto st = sec.child("strategy")) s.strategy = read_strategy(*st);
    if (auto sim = sec.child("simulation")) {
        s.trials = sim->integer<std::int64_t>("trials", s.trials);
        s.seed = sim->integer<std::uint64_t>("seed", s.seed);
        sim->finish();
    }
    if (auto m = sec.child("metrics")) {
        f.c_target = m->number("c_target", f.c_target);
        m->finish();
    }
    if (auto sw = sec.child("sweep")) f.sweep = read_sweep(*sw);
    if (auto ov = sec.child("channel_override")) s.channel_override = read_override(*ov);
    sec.finish();
    return f;
}

std::string serialize_scenario_file(const ScenarioFile& f)
{
    const Scenario& s = f.scenario;
    Json root;
    root["schema_version"] = f.schema_version;
    root["name"] = f.name;
    root["description"] = f.description;

    root["topology"] = {{"d_v", s.topology.d_v},
                        {"d_tl", s.topology.d_tl},
                        {"d_te", s.topology.d_te},
                        {"d_tr", s.topology.d_tr},
                        {"d_tr_domain", Json::array({s.topology.d_tr_min, s.topology.d_tr_max})}};
    root["radio"] = {{"tx_power_dbm", s.radio.tx_power_dbm},
                     {"noise_power_dbm", s.radio.noise_power_dbm},
                     {"c0_db", s.radio.c0_db},
                     {"d0", s.radio.d0},
                     {"gamma", s.radio.gamma}};

    Json model;
    if (const auto* p = std::get_if<PracticalAmplitude>(&s.ris.amplitude))
        model = {{"kind", "practical"}, {"beta_min", p->beta_min}, {"phi", p->phi}, {"alpha", p->alpha}};
    else
        model = {{"kind", "ideal"}};
    root["ris"] = {{"n_elements", s.ris.n_elements},
                   {"amplitude_model", model},
                   {"quantization_bits", s.ris.quantization_bits ? Json(*s.ris.quantization_bits) : Json(nullptr)}};

    Json strategy;
    if (const auto* p = std::get_if<PreNullStrategy>(&s.strategy)) {
        strategy = {{"kind", "prenull"},
                    {"tolerance", p->tolerance},
                    {"max_iters", p->max_iters},
                    {"init", p->init == NullingInit::Spread ? "spread" : "matched"}};
    } else if (const auto* a = std::get_if<AnPartitionStrategy>(&s.strategy)) {
        strategy = {{"kind", "an_partition"},
                    {"mu", a->mu},
                    {"rho", a->rho},
                    {"an_phase_channel", a->phase_channel == AnPhaseChannel::AnAntenna ? "an_antenna" : "info_antenna"},
                    {"an_nulls_receiver", a->an_nulls_receiver}};
    } else {
        strategy = {{"kind", "matched"}};
    }
    root["strategy"] = strategy;
    root["simulation"] = {{"trials", s.trials}, {"seed", s.seed}};
    root["metrics"] = {{"c_target", f.c_target}};

    if (f.sweep) {
        Json values = Json::array();
        for (const auto& v : f.sweep->values) {
            if (const auto* d = std::get_if<double>(&v))
                values.push_back(*d);
            else
                values.push_back(std::get<std::string>(v));
        }
        Json series = Json::array();
        for (const auto& ser : f.sweep->series) {
            Json obj = Json::object();
            for (const auto& [key, value] : ser.overrides)
                obj[key] = text_to_scalar(value);
            series.push_back(obj);
        }
        root["sweep"] = {{"axis", f.sweep->axis},
                         {"values", values},
                         {"common_random_numbers", f.sweep->common_random_numbers},
                         {"series", series}};
    }

    if (s.channel_override) {
        if (const auto* e = std::get_if<ExplicitChannels>(&*s.channel_override)) {
            root["channel_override"] = {{"kind", "explicit"},
                                        {"h", write_complex_vector(e->h)},
                                        {"h_an", write_complex_vector(e->h_an)},
                                        {"g", write_complex_vector(e->g)},
                                        {"k", write_complex_vector(e->k)}};
        } else {
            root["channel_override"] = {{"kind", "unit_gain"}};
        }
    }
    return root.dump(2) + "\n";
}

std::string load_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return ss.str();
}

void save_text(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("error writing " + path.string());
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) { return parse_scenario_file(load_text(path)); }

std::string content_hash(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string scenario_hash(const ScenarioFile& f) { return content_hash(serialize_scenario_file(f)); }

void apply_file_override(ScenarioFile& f, std::string_view key, std::string_view value)
{
    if (key == "c_target") {
        std::string buf(value);
        char* end = nullptr;
        const double x = std::strtod(buf.c_str(), &end);
        if (buf.empty() || end != buf.c_str() + buf.size()) throw OverrideError("c_target", "expected a number");
        f.c_target = x;
        return;
    }
    apply_override(f.scenario, key, value);
    if (!f.sweep) return;
    // The override also wins over series values and pins the sweep axis.
    for (auto& series : f.sweep->series)
        for (auto& [k, v] : series.overrides)
            if (k == key) v = std::string(value);
    if (f.sweep->axis == key) {
        const std::string text(value);
        char* end = nullptr;
        const double x = std::strtod(text.c_str(), &end);
        if (!text.empty() && end == text.c_str() + text.size())
            f.sweep->values = {x};
        else
            f.sweep->values = {text};
    }
}

SweepSpec effective_sweep(const ScenarioFile& f)
{
    if (f.sweep) return *f.sweep;
    SweepSpec single;
    single.axis = "N";
    single.values = {static_cast<double>(f.scenario.ris.n_elements)};
    return single;
}

}  // namespace rissec
