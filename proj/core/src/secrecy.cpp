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

#include "rissec/secrecy.hpp"

#include <algorithm>
#include <cmath>

namespace rissec {
namespace {

constexpr double kZ95 = 1.959963984540054;

double sum_sorted(std::vector<double>& v)
{
    std::sort(v.begin(), v.end());
    double acc = 0.0;
    for (double x : v)
        acc += x;
    return acc;
}

}  // namespace

PowerSplit PowerSplit::from(const DesignStrategy& s)
{
    if (const auto* an = std::get_if<AnPartitionStrategy>(&s)) return {an->mu, true, an->an_nulls_receiver};
    return {};
}

EffectiveGains effective_gains(const ChannelRealization& ch, const RisProfile& p, const PowerSplit& split)
{
    EffectiveGains g;
    g.info_l = std::norm(cascaded_gain(p.psi, ch.h, ch.g));
    g.info_e = std::norm(cascaded_gain(p.psi, ch.h, ch.k));
    if (split.an_active) {
        if (!split.an_nulls_receiver) g.an_l = std::norm(cascaded_gain(p.psi, ch.h_an, ch.g));
        g.an_e = std::norm(cascaded_gain(p.psi, ch.h_an, ch.k));
    }
    return g;
}

SecrecySample evaluate_gains(const EffectiveGains& gains, const PowerSplit& split, double tx_power_w,
                             double noise_power_w)
{
    SecrecySample out;
    out.gains = gains;
    const double info_w = split.info_fraction * tx_power_w;
    const double an_w = split.an_active ? (1.0 - split.info_fraction) * tx_power_w : 0.0;
    out.sinr_l = info_w * gains.info_l / (an_w * gains.an_l + noise_power_w);
    out.sinr_e = info_w * gains.info_e / (an_w * gains.an_e + noise_power_w);
    out.c_l = std::log2(1.0 + out.sinr_l);
    out.c_e = std::log2(1.0 + out.sinr_e);
    out.gap = out.c_l - out.c_e;
    out.c_s = std::max(out.gap, 0.0);
    return out;
}

SecrecySample evaluate_trial(const ValidatedScenario& vs, const ChannelRealization& ch, const RisProfile& p)
{
    const Scenario& s = vs.get();
    const auto split = PowerSplit::from(s.strategy);
    return evaluate_gains(effective_gains(ch, p, split), split, s.radio.tx_power_watts(), s.radio.noise_power_watts());
}

SecrecyStats aggregate(std::span<const SecrecySample> samples, double c_target, const Scenario& s)
{
    if (samples.empty()) throw EmptySamplesError();

    SecrecyStats st;
    st.trials = static_cast<std::int64_t>(samples.size());
    st.c_target = c_target;

    std::vector<double> rates;
    rates.reserve(samples.size());
    for (const auto& x : samples) {
        rates.push_back(x.c_s);
        if (x.c_s < c_target) ++st.outage_count;
        if (x.gap <= 0.0)
            ++st.intercept_count;
        else
            ++st.positive_count;
    }
    st.coverage_count = st.trials - st.outage_count;

    const auto n = static_cast<double>(st.trials);
    st.mean_secrecy_rate = sum_sorted(rates) / n;
    if (st.trials > 1) {
        std::vector<double> dev2;
        dev2.reserve(rates.size());
        for (double r : rates)
            dev2.push_back((r - st.mean_secrecy_rate) * (r - st.mean_secrecy_rate));
        st.stddev = std::sqrt(sum_sorted(dev2) / (n - 1.0));
    }
    const double half = kZ95 * st.stddev / std::sqrt(n);
    st.ci_low = st.mean_secrecy_rate - half;
    st.ci_high = st.mean_secrecy_rate + half;

    st.sop = static_cast<double>(st.outage_count) / n;
    st.intercept = static_cast<double>(st.intercept_count) / n;
    // Complements are taken in floating point so the identities hold bit for bit.
    st.spsc = 1.0 - st.intercept;
    st.coverage = 1.0 - st.sop;
    st.see = st.mean_secrecy_rate / s.radio.tx_power_watts();
    return st;
}

double mean_secrecy_rate_at(std::span<const SecrecySample> samples, const Scenario& s, double tx_power_dbm)
{
    if (samples.empty()) throw EmptySamplesError();
    const auto split = PowerSplit::from(s.strategy);
    const double p = dbm_to_watts(tx_power_dbm);
    const double noise = s.radio.noise_power_watts();
    std::vector<double> rates;
    rates.reserve(samples.size());
    for (const auto& x : samples)
        rates.push_back(evaluate_gains(x.gains, split, p, noise).c_s);
    return sum_sorted(rates) / static_cast<double>(rates.size());
}

SecurePower secure_power(std::span<const SecrecySample> samples, const Scenario& s, double c_target, double lower_dbm,
                         double upper_dbm, double tolerance_db)
{
    auto meets = [&](double dbm) { return mean_secrecy_rate_at(samples, s, dbm) >= c_target; };
    if (meets(lower_dbm)) return {true, lower_dbm};
    if (!meets(upper_dbm)) return {false, upper_dbm};
    double lo = lower_dbm;
    double hi = upper_dbm;
    while (hi - lo > tolerance_db) {
        const double mid = 0.5 * (lo + hi);
        (meets(mid) ? hi : lo) = mid;
    }
    return {true, hi};
}

}  // namespace rissec
