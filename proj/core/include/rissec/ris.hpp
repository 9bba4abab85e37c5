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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rissec/channel.hpp"
#include "rissec/scenario.hpp"
#include "rissec/units.hpp"

namespace rissec {

class LengthMismatch : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Reflection vector psi_i = beta_i exp(j theta_i) and how it was produced.
struct RisProfile
{
    std::vector<double> theta;  // (-pi, pi]
    std::vector<double> beta;   // [0, 1]
    ComplexVector psi;

    std::string strategy;
    std::optional<int> quantization_bits;
    int degenerate_elements = 0;  // elements whose steering product was exactly zero

    std::size_t size() const { return psi.size(); }
};

/// Reflection amplitude for a phase. IDEAL is always 1.
double amplitude(const AmplitudeModel& model, double theta);

/// Builds a profile from phases, applying the amplitude model.
RisProfile make_profile(std::vector<double> theta, const AmplitudeModel& model, std::string strategy);

/// sum_i a_i psi_i b_i. Throws LengthMismatch.
Complex cascaded_gain(std::span<const Complex> psi, std::span<const Complex> a, std::span<const Complex> b);

/// theta_i = -arg(h_i g_i): co-phases every reflected path at the receiver.
RisProfile design_matched(const ChannelRealization& ch, const AmplitudeModel& model = IdealAmplitude{});

struct NullingResult
{
    RisProfile profile;
    int iterations = 0;
    double residual = 0.0;  // |xi^T psi|^2 / (|xi|^2 N)
    bool converged = false;
    std::vector<double> residual_history;  // entry 0 is the initial point
};

/// Leakage ratio |xi^T psi|^2 / (|xi|^2 N) for xi_i = h_i k_i. Zero when xi is zero.
double leakage_ratio(std::span<const Complex> xi, std::span<const Complex> psi);

/// Alternating projection onto {psi : xi^T psi = 0} and normalization back to
/// the feasible reflection set, with xi_i = h_i k_i. converged is false when
/// the tolerance is not met within max_iters; the caller decides what to do.
NullingResult design_prenull(const ChannelRealization& ch, const PreNullStrategy& opts,
                             const AmplitudeModel& model = IdealAmplitude{});

/// Same solver on an explicit xi. Exposed for tests.
NullingResult null_steer(std::span<const Complex> xi, std::vector<double> initial_theta,
                         const PreNullStrategy& opts, const AmplitudeModel& model = IdealAmplitude{});

/// Deterministic golden-angle phase pattern used as the default nulling start.
std::vector<double> spread_phases(std::size_t n);

/// First round(rho N) elements steer AN at the eavesdropper, the rest steer
/// information at the receiver.
RisProfile design_an_partition(const ChannelRealization& ch, double rho,
                               AnPhaseChannel phase_channel = AnPhaseChannel::AnAntenna,
                               const AmplitudeModel& model = IdealAmplitude{});

/// Uniform midpoint codebook {-pi + (2k+1) pi / 2^b}, k = 0 .. 2^b - 1.
std::vector<double> phase_codebook(int bits);

/// Index of the nearest codeword in wrapped distance; ties go to the smaller index.
int nearest_codeword(double theta, int bits);

RisProfile quantize_phases(const RisProfile& p, int bits, const AmplitudeModel& model = IdealAmplitude{});

struct DesignOutcome
{
    RisProfile profile;
    std::optional<NullingResult> nulling;
    double quantized_residual = 0.0;  // leakage after quantization (pre-null only)
};

/// Runs the scenario's strategy, then quantization if configured.
DesignOutcome design(const Scenario& s, const ChannelRealization& ch);

}  // namespace rissec
