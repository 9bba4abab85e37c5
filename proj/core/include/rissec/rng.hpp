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
#include <random>

#include "rissec/units.hpp"

namespace rissec {

/// Identifies one deterministic random substream. Every trial draws from
/// substreams keyed by (seed, stream, trial, link) alone, so results do not
/// depend on which worker runs the trial or in what order.
struct SubstreamKey
{
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;  // 0 when common random numbers are shared across sweep points
    std::uint64_t trial = 0;
};

enum class Link : std::uint32_t
{
    TxToRis = 1,
    RisToReceiver = 2,
    RisToEavesdropper = 3,
    AnTxToRis = 4,
};

using Engine = std::mt19937_64;

Engine make_engine(const SubstreamKey& key, Link link);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Engine& engine);

/// Circularly-symmetric complex Gaussian with unit variance (each part has variance 1/2).
/// Box-Muller on the engine's raw output, so draws are identical across standard libraries.
Complex complex_normal(Engine& engine);

}  // namespace rissec
