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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rissec/units.hpp"

namespace rissec {

/// Line topology: transmitter, eavesdropper and receiver on one line, the RIS
/// on a parallel line at vertical offset d_v. All distances in meters.
struct Topology
{
    double d_v = 10.0;
    double d_tl = 20.0;
    double d_te = 15.0;
    double d_tr = 10.0;
    // Admissible range for d_tr (the placement sweep domain).
    double d_tr_min = 5.0;
    double d_tr_max = 19.0;

    bool operator==(const Topology&) const = default;
};

struct RadioParams
{
    double tx_power_dbm = 20.0;
    double noise_power_dbm = -100.0;
    double c0_db = -30.0;
    double d0 = 1.0;
    double gamma = 3.0;

    double tx_power_watts() const { return dbm_to_watts(tx_power_dbm); }
    double noise_power_watts() const { return dbm_to_watts(noise_power_dbm); }

    bool operator==(const RadioParams&) const = default;
};

struct IdealAmplitude
{
    bool operator==(const IdealAmplitude&) const = default;
};

/// Phase-dependent reflection amplitude: (1 - beta_min) ((sin(theta - phi) + 1) / 2)^alpha + beta_min.
struct PracticalAmplitude
{
    double beta_min = 0.5;
    double phi = kPi / 2.0;
    double alpha = 2.0;

    bool operator==(const PracticalAmplitude&) const = default;
};

using AmplitudeModel = std::variant<IdealAmplitude, PracticalAmplitude>;

struct RisConfig
{
    int n_elements = 50;
    AmplitudeModel amplitude = IdealAmplitude{};
    std::optional<int> quantization_bits;  // empty: continuous phases

    bool operator==(const RisConfig&) const = default;
};

/// Phase design that co-phases every reflected path at the receiver.
struct MatchedStrategy
{
    bool operator==(const MatchedStrategy&) const = default;
};

enum class NullingInit
{
    Spread,   // deterministic golden-angle phase pattern, independent of the legitimate link
    Matched,  // start from the matched design
};

/// Unit-modulus null steering toward the eavesdropper (its CSI is known).
struct PreNullStrategy
{
    double tolerance = 1e-14;
    int max_iters = 500;
    NullingInit init = NullingInit::Spread;

    bool operator==(const PreNullStrategy&) const = default;
};

/// Which transmit antenna's channel steers the AN group's phases.
enum class AnPhaseChannel
{
    AnAntenna,
    InfoAntenna,
};

/// Artificial noise from a second antenna. A fraction mu of the power carries
/// information; the first round(rho * N) RIS elements reflect AN toward the
/// eavesdropper.
struct AnPartitionStrategy
{
    double mu = 0.5;
    double rho = 0.0;
    AnPhaseChannel phase_channel = AnPhaseChannel::AnAntenna;
    bool an_nulls_receiver = false;

    bool operator==(const AnPartitionStrategy&) const = default;
};

using DesignStrategy = std::variant<MatchedStrategy, PreNullStrategy, AnPartitionStrategy>;

/// Test hook: replaces the random channel draw.
struct UnitGainOverride
{
    bool operator==(const UnitGainOverride&) const = default;
};

struct ExplicitChannels
{
    ComplexVector h;
    ComplexVector h_an;
    ComplexVector g;
    ComplexVector k;

    bool operator==(const ExplicitChannels&) const = default;
};

using ChannelOverride = std::variant<UnitGainOverride, ExplicitChannels>;

struct Scenario
{
    Topology topology;
    RadioParams radio;
    RisConfig ris;
    DesignStrategy strategy = MatchedStrategy{};
    std::int64_t trials = 10000;
    std::uint64_t seed = 1;
    std::optional<ChannelOverride> channel_override;

    bool operator==(const Scenario&) const = default;
};

struct Violation
{
    std::string field;
    std::string reason;

    bool operator==(const Violation&) const = default;
};

/// Carries every invariant violation found, not only the first.
class ValidationError : public std::runtime_error
{
  public:
    explicit ValidationError(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const noexcept { return violations_; }

  private:
    std::vector<Violation> violations_;
};

/// A scenario whose invariants have been checked. Immutable.
class ValidatedScenario
{
  public:
    const Scenario& get() const noexcept { return scenario_; }
    const Scenario* operator->() const noexcept { return &scenario_; }

  private:
    explicit ValidatedScenario(Scenario s) : scenario_(std::move(s)) {}
    friend ValidatedScenario validate(const Scenario& s);

    Scenario scenario_;
};

std::vector<Violation> check(const Scenario& s);

/// Throws ValidationError listing every violation.
ValidatedScenario validate(const Scenario& s);

struct Geometry
{
    double d_t_ris;
    double d_ris_rx;
    double d_ris_ev;
};

Geometry derive_geometry(const Topology& t);

/// Size of the AN element group, round(rho * n) with ties toward the larger group.
int an_group_size(double rho, int n_elements);

const char* strategy_name(const DesignStrategy& s);
const char* model_name(const AmplitudeModel& m);

}  // namespace rissec
