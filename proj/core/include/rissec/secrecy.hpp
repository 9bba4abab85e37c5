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
#include <span>
#include <stdexcept>
#include <vector>

#include "rissec/channel.hpp"
#include "rissec/ris.hpp"
#include "rissec/scenario.hpp"

namespace rissec {

class EmptySamplesError : public std::invalid_argument
{
  public:
    EmptySamplesError() : std::invalid_argument("aggregate: no samples") {}
};

/// Squared magnitudes of the cascaded gains seen in one trial. Designs do not
/// depend on transmit power, so these are enough to re-evaluate a trial at
/// any power level.
struct EffectiveGains
{
    double info_l = 0.0;  // |sum h psi g|^2
    double info_e = 0.0;  // |sum h psi k|^2
    double an_l = 0.0;    // |sum h_an psi g|^2, zero without AN
    double an_e = 0.0;    // |sum h_an psi k|^2
};

struct SecrecySample
{
    double sinr_l = 0.0;
    double sinr_e = 0.0;
    double c_l = 0.0;  // log2(1 + sinr_l), bits/s/Hz
    double c_e = 0.0;
    double c_s = 0.0;  // max(c_l - c_e, 0)
    double gap = 0.0;  // c_l - c_e before clamping
    EffectiveGains gains;
};

/// How received power splits between information and AN.
struct PowerSplit
{
    double info_fraction = 1.0;  // mu, 1 without AN
    bool an_active = false;
    bool an_nulls_receiver = false;

    static PowerSplit from(const DesignStrategy& s);
};

EffectiveGains effective_gains(const ChannelRealization& ch, const RisProfile& p, const PowerSplit& split);

/// SINRs and rates for given gains at transmit power and noise power in watts.
SecrecySample evaluate_gains(const EffectiveGains& gains, const PowerSplit& split, double tx_power_w,
                             double noise_power_w);

SecrecySample evaluate_trial(const ValidatedScenario& s, const ChannelRealization& ch, const RisProfile& p);

struct SecurePower
{
    bool attainable = false;
    double dbm = 0.0;
};

struct SecrecyStats
{
    std::int64_t trials = 0;
    double c_target = 0.0;

    double mean_secrecy_rate = 0.0;
    double stddev = 0.0;
    double ci_low = 0.0;  // normal-approximation 95% interval on the mean
    double ci_high = 0.0;

    // Counts over the sample set; the probabilities below are count / trials.
    std::int64_t outage_count = 0;     // c_s < c_target
    std::int64_t intercept_count = 0;  // c_l - c_e <= 0
    std::int64_t positive_count = 0;   // c_l - c_e > 0
    std::int64_t coverage_count = 0;   // complement of outage

    double sop = 0.0;
    double intercept = 0.0;
    double spsc = 0.0;
    double coverage = 0.0;
    double see = 0.0;  // mean secrecy rate per watt of total transmit power

    std::optional<SecurePower> secure_power;
};

/// Table of secrecy metrics. The result does not depend on sample order.
/// Throws EmptySamplesError.
SecrecyStats aggregate(std::span<const SecrecySample> samples, double c_target, const Scenario& s);

/// Mean secrecy rate over a fixed sample set re-evaluated at another transmit power.
double mean_secrecy_rate_at(std::span<const SecrecySample> samples, const Scenario& s, double tx_power_dbm);

/// Smallest transmit power in [lower_dbm, upper_dbm] whose mean secrecy rate
/// over the sample set reaches c_target, by bisection to tolerance_db.
SecurePower secure_power(std::span<const SecrecySample> samples, const Scenario& s, double c_target,
                         double lower_dbm = -20.0, double upper_dbm = 50.0, double tolerance_db = 0.1);

}  // namespace rissec
