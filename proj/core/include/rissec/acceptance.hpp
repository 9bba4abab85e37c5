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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rissec/config.hpp"

namespace rissec::acceptance {

struct Options
{
    std::int64_t trials = 10000;  // per sweep point
    std::uint64_t seed = 20240601;
    unsigned workers = 1;
    // Where presets come from; defaults to the shipped ones.
    std::function<ScenarioFile(std::string_view)> preset_source;
};

struct CriterionResult
{
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Criterion
{
    std::string id;
    std::string title;
    std::function<CriterionResult(const Options&)> run;
};

/// Every acceptance criterion, in report order.
const std::vector<Criterion>& criteria();

/// Runs the criteria whose id is in `only` (all when empty). A criterion that
/// throws is reported as failed with the exception message.
std::vector<CriterionResult> run(const Options& opts, const std::vector<std::string>& only = {},
                                 const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] id  title  (detail)"
std::string format(const CriterionResult& r);

}  // namespace rissec::acceptance
