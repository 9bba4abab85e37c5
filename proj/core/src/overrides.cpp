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

#include "rissec/overrides.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

namespace rissec {
namespace {

double to_double(std::string_view key, std::string_view v)
{
    std::string buf(v);
    char* end = nullptr;
    const double x = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size()) throw OverrideError(std::string(key), "expected a number, got '" + buf + "'");
    return x;
}

template <typename Int>
Int to_int(std::string_view key, std::string_view v)
{
    Int x{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw OverrideError(std::string(key), "expected an integer, got '" + std::string(v) + "'");
    return x;
}

bool to_bool(std::string_view key, std::string_view v)
{
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw OverrideError(std::string(key), "expected true or false, got '" + std::string(v) + "'");
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

PracticalAmplitude& practical(Scenario& s)
{
    if (!std::holds_alternative<PracticalAmplitude>(s.ris.amplitude)) s.ris.amplitude = PracticalAmplitude{};
    return std::get<PracticalAmplitude>(s.ris.amplitude);
}

PreNullStrategy& prenull(Scenario& s)
{
    if (!std::holds_alternative<PreNullStrategy>(s.strategy)) s.strategy = PreNullStrategy{};
    return std::get<PreNullStrategy>(s.strategy);
}

AnPartitionStrategy& an(Scenario& s)
{
    if (!std::holds_alternative<AnPartitionStrategy>(s.strategy)) s.strategy = AnPartitionStrategy{};
    return std::get<AnPartitionStrategy>(s.strategy);
}

PracticalAmplitude practical_or_default(const Scenario& s)
{
    const auto* p = std::get_if<PracticalAmplitude>(&s.ris.amplitude);
    return p ? *p : PracticalAmplitude{};
}

PreNullStrategy prenull_or_default(const Scenario& s)
{
    const auto* p = std::get_if<PreNullStrategy>(&s.strategy);
    return p ? *p : PreNullStrategy{};
}

AnPartitionStrategy an_or_default(const Scenario& s)
{
    const auto* p = std::get_if<AnPartitionStrategy>(&s.strategy);
    return p ? *p : AnPartitionStrategy{};
}

struct Field
{
    std::function<void(Scenario&, std::string_view key, std::string_view value)> set;
    std::function<std::string(const Scenario&)> get;
};

template <typename Member>
Field number(Member member)
{
    return {[member](Scenario& s, std::string_view k, std::string_view v) { member(s) = to_double(k, v); },
            [member](const Scenario& s) { return fmt(member(s)); }};
}

const std::map<std::string, Field, std::less<>>& registry()
{
    static const std::map<std::string, Field, std::less<>> fields = [] {
        std::map<std::string, Field, std::less<>> f;
        f["d_v"] = number([](auto& s) -> auto& { return s.topology.d_v; });
        f["d_tl"] = number([](auto& s) -> auto& { return s.topology.d_tl; });
        f["d_te"] = number([](auto& s) -> auto& { return s.topology.d_te; });
        f["d_tr"] = number([](auto& s) -> auto& { return s.topology.d_tr; });
        f["d_tr_min"] = number([](auto& s) -> auto& { return s.topology.d_tr_min; });
        f["d_tr_max"] = number([](auto& s) -> auto& { return s.topology.d_tr_max; });
        f["tx_power"] = number([](auto& s) -> auto& { return s.radio.tx_power_dbm; });
        f["noise_power"] = number([](auto& s) -> auto& { return s.radio.noise_power_dbm; });
        f["c0_db"] = number([](auto& s) -> auto& { return s.radio.c0_db; });
        f["d0"] = number([](auto& s) -> auto& { return s.radio.d0; });
        f["gamma"] = number([](auto& s) -> auto& { return s.radio.gamma; });

        f["N"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                      // Sweep values arrive as doubles ("50" or "50.000000000000000").
                      const double x = to_double(k, v);
                      if (x != std::floor(x)) throw OverrideError(std::string(k), "expected an integer");
                      s.ris.n_elements = static_cast<int>(x);
                  },
                  [](const Scenario& s) { return std::to_string(s.ris.n_elements); }};
        f["model"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                          if (v == "ideal")
                              s.ris.amplitude = IdealAmplitude{};
                          else if (v == "practical")
                              practical(s);
                          else
                              throw OverrideError(std::string(k), "expected ideal or practical");
                      },
                      [](const Scenario& s) { return std::string(model_name(s.ris.amplitude)); }};
        f["beta_min"] = {[](Scenario& s, std::string_view k, std::string_view v) { practical(s).beta_min = to_double(k, v); },
                         [](const Scenario& s) { return fmt(practical_or_default(s).beta_min); }};
        f["phi"] = {[](Scenario& s, std::string_view k, std::string_view v) { practical(s).phi = to_double(k, v); },
                    [](const Scenario& s) { return fmt(practical_or_default(s).phi); }};
        f["alpha"] = {[](Scenario& s, std::string_view k, std::string_view v) { practical(s).alpha = to_double(k, v); },
                      [](const Scenario& s) { return fmt(practical_or_default(s).alpha); }};
        f["b"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                      if (v == "inf" || v == "none")
                          s.ris.quantization_bits.reset();
                      else {
                          const double x = to_double(k, v);
                          if (std::isinf(x)) {
                              s.ris.quantization_bits.reset();
                              return;
                          }
                          if (x != std::floor(x)) throw OverrideError(std::string(k), "expected an integer or inf");
                          s.ris.quantization_bits = static_cast<int>(x);
                      }
                  },
                  [](const Scenario& s) {
                      return s.ris.quantization_bits ? std::to_string(*s.ris.quantization_bits) : std::string("inf");
                  }};

        f["strategy"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                             if (v == "matched")
                                 s.strategy = MatchedStrategy{};
                             else if (v == "prenull")
                                 prenull(s);
                             else if (v == "an_partition")
                                 an(s);
                             else
                                 throw OverrideError(std::string(k), "expected matched, prenull or an_partition");
                         },
                         [](const Scenario& s) { return std::string(strategy_name(s.strategy)); }};
        f["tolerance"] = {[](Scenario& s, std::string_view k, std::string_view v) { prenull(s).tolerance = to_double(k, v); },
                          [](const Scenario& s) { return fmt(prenull_or_default(s).tolerance); }};
        f["max_iters"] = {[](Scenario& s, std::string_view k, std::string_view v) { prenull(s).max_iters = to_int<int>(k, v); },
                          [](const Scenario& s) { return std::to_string(prenull_or_default(s).max_iters); }};
        f["init"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                         if (v == "spread")
                             prenull(s).init = NullingInit::Spread;
                         else if (v == "matched")
                             prenull(s).init = NullingInit::Matched;
                         else
                             throw OverrideError(std::string(k), "expected spread or matched");
                     },
                     [](const Scenario& s) {
                         return std::string(prenull_or_default(s).init == NullingInit::Spread ? "spread" : "matched");
                     }};
        f["mu"] = {[](Scenario& s, std::string_view k, std::string_view v) { an(s).mu = to_double(k, v); },
                   [](const Scenario& s) { return fmt(an_or_default(s).mu); }};
        f["rho"] = {[](Scenario& s, std::string_view k, std::string_view v) { an(s).rho = to_double(k, v); },
                    [](const Scenario& s) { return fmt(an_or_default(s).rho); }};
        f["an_phase_channel"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                                     if (v == "an_antenna")
                                         an(s).phase_channel = AnPhaseChannel::AnAntenna;
                                     else if (v == "info_antenna")
                                         an(s).phase_channel = AnPhaseChannel::InfoAntenna;
                                     else
                                         throw OverrideError(std::string(k), "expected an_antenna or info_antenna");
                                 },
                                 [](const Scenario& s) {
                                     return std::string(an_or_default(s).phase_channel == AnPhaseChannel::AnAntenna
                                                            ? "an_antenna"
                                                            : "info_antenna");
                                 }};
        f["an_nulls_receiver"] = {
            [](Scenario& s, std::string_view k, std::string_view v) { an(s).an_nulls_receiver = to_bool(k, v); },
            [](const Scenario& s) { return std::string(an_or_default(s).an_nulls_receiver ? "true" : "false"); }};

        f["trials"] = {[](Scenario& s, std::string_view k, std::string_view v) { s.trials = to_int<std::int64_t>(k, v); },
                       [](const Scenario& s) { return std::to_string(s.trials); }};
        f["seed"] = {[](Scenario& s, std::string_view k, std::string_view v) { s.seed = to_int<std::uint64_t>(k, v); },
                     [](const Scenario& s) { return std::to_string(s.seed); }};
        return f;
    }();
    return fields;
}

const Field& lookup(std::string_view key)
{
    const auto& r = registry();
    auto it = r.find(key);
    if (it == r.end()) throw OverrideError(std::string(key), "unknown key");
    return it->second;
}

}  // namespace

void apply_override(Scenario& s, std::string_view key, std::string_view value) { lookup(key).set(s, key, value); }

std::string read_override(const Scenario& s, std::string_view key) { return lookup(key).get(s); }

const std::vector<std::string>& override_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& [name, _] : registry())
            k.push_back(name);
        return k;
    }();
    return keys;
}

std::pair<std::string, std::string> split_assignment(std::string_view text)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0) throw OverrideError(std::string(text), "expected key=value");
    return {std::string(text.substr(0, eq)), std::string(text.substr(eq + 1))};
}

}  // namespace rissec
