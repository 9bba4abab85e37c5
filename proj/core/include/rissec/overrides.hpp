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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rissec/scenario.hpp"

namespace rissec {

/// Unknown key or unparsable value in a key=value override.
class OverrideError : public std::invalid_argument
{
  public:
    OverrideError(std::string key, const std::string& reason)
        : std::invalid_argument(key + ": " + reason), key_(std::move(key))
    {
    }
    const std::string& key() const noexcept { return key_; }

  private:
    std::string key_;
};

/// Sets one scenario field by short name (N, d_tr, gamma, rho, mu, b, model,
/// strategy, ...). Setting a parameter that belongs to another model or
/// strategy switches to it with default values first. The scenario is not
/// validated here.
void apply_override(Scenario& s, std::string_view key, std::string_view value);

/// Reads the current value of a field in the same textual form apply_override accepts.
std::string read_override(const Scenario& s, std::string_view key);

const std::vector<std::string>& override_keys();

/// Splits "key=value". Throws OverrideError when there is no '='.
std::pair<std::string, std::string> split_assignment(std::string_view text);

}  // namespace rissec
