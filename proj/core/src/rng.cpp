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

#include "rissec/rng.hpp"

#include <cmath>

namespace rissec {
namespace {

constexpr std::uint32_t lo32(std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); }
constexpr std::uint32_t hi32(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

}  // namespace

Engine make_engine(const SubstreamKey& key, Link link)
{
    std::seed_seq seq{lo32(key.seed),  hi32(key.seed),  lo32(key.stream), hi32(key.stream),
                      lo32(key.trial), hi32(key.trial), static_cast<std::uint32_t>(link)};
    return Engine(seq);
}

double uniform01(Engine& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

Complex complex_normal(Engine& engine)
{
    const double u1 = 1.0 - uniform01(engine);  // (0, 1]
    const double u2 = uniform01(engine);
    const double r = std::sqrt(-std::log(u1));
    const double a = 2.0 * kPi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace rissec
