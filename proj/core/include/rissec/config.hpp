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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rissec/engine.hpp"
#include "rissec/scenario.hpp"

namespace rissec {

inline constexpr int kSchemaVersion = 1;

/// Malformed scenario document: bad JSON, unknown key, wrong type.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string key, const std::string& reason)
        : std::runtime_error(key.empty() ? reason : key + ": " + reason), key_(std::move(key))
    {
    }
    const std::string& key() const noexcept { return key_; }

  private:
    std::string key_;
};

class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A scenario document: one experiment plus an optional sweep.
struct ScenarioFile
{
    int schema_version = kSchemaVersion;
    std::string name;
    std::string description;
    Scenario scenario;
    double c_target = 1.0;  // bits/s/Hz, for outage / coverage / secure power
    std::optional<SweepSpec> sweep;

    bool operator==(const ScenarioFile&) const = default;
};

/// Strict JSON parser: unknown keys and type mismatches throw ConfigError
/// naming the offending key path.
ScenarioFile parse_scenario_file(std::string_view text);

/// Canonical serialization; parse(serialize(f)) == f.
std::string serialize_scenario_file(const ScenarioFile& f);

ScenarioFile load_scenario_file(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, std::string_view text);
std::string load_text(const std::filesystem::path& path);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string content_hash(std::string_view bytes);

/// Hash of the canonical serialization.
std::string scenario_hash(const ScenarioFile& f);

/// Like apply_override, plus the document-level key c_target. A key that a
/// sweep series also sets is replaced there too; overriding the sweep axis
/// reduces the sweep to that single value.
void apply_file_override(ScenarioFile& f, std::string_view key, std::string_view value);

/// The sweep to run: the document's own, or a single point at the current N.
SweepSpec effective_sweep(const ScenarioFile& f);

}  // namespace rissec
