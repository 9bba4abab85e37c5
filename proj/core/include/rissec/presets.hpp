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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rissec/config.hpp"

namespace rissec {

/// Shipped experiment presets: baseline, fig8a, fig8b, fig9a, fig9b, fig10.
const std::vector<std::string>& preset_names();

/// Throws std::out_of_range for an unknown name.
ScenarioFile preset(std::string_view name);

/// Hash of the shipped content of a preset.
std::string preset_hash(std::string_view name);

/// "presets/fig8a", "fig8a" or "presets/fig8a.json" -> "fig8a" when it names a shipped preset.
std::optional<std::string> preset_name_from_path(std::string_view path);

}  // namespace rissec
