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

#include <cstddef>

#include "rissec/rng.hpp"
#include "rissec/scenario.hpp"
#include "rissec/units.hpp"

namespace rissec {

/// Distance-based path loss L(d) = c0 (d / d0)^-gamma, linear scale.
struct PathLossModel
{
    double c0_linear;
    double d0;
    double gamma;

    static PathLossModel from(const RadioParams& r);
};

/// Throws std::domain_error when d <= 0.
double path_loss(const PathLossModel& m, double distance);

/// One block-fading draw. Path loss is folded into every coefficient.
struct ChannelRealization
{
    ComplexVector h;     // transmitter (information antenna) -> RIS element
    ComplexVector h_an;  // transmitter (AN antenna) -> RIS element; empty unless AN is active
    ComplexVector g;     // RIS element -> receiver
    ComplexVector k;     // RIS element -> eavesdropper

    std::size_t size() const { return h.size(); }
};

/// Draws Rayleigh gains for one trial. Each link has its own substream, so
/// the first M coefficients of a link coincide for any N >= M.
ChannelRealization draw_channels(const ValidatedScenario& s, const SubstreamKey& key);

}  // namespace rissec
