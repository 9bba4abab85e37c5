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

#include "rissec/scenario.hpp"

#include <cmath>
#include <sstream>

namespace rissec {
namespace {

std::string summarize(const std::vector<Violation>& violations)
{
    std::ostringstream os;
    os << "invalid scenario:";
    for (const auto& v : violations)
        os << "\n  " << v.field << ": " << v.reason;
    return os.str();
}

class Checker
{
  public:
    void require(bool ok, std::string field, std::string reason)
    {
        if (!ok) found_.push_back({std::move(field), std::move(reason)});
    }

    void positive(double value, const char* field)
    {
        if (!std::isfinite(value))
            require(false, field, "must be finite");
        else
            require(value > 0.0, field, "must be positive");
    }

    void unit_interval(double value, const char* field)
    {
        require(std::isfinite(value) && value >= 0.0 && value <= 1.0, field, "outside [0,1]");
    }

    std::vector<Violation> take() { return std::move(found_); }

  private:
    std::vector<Violation> found_;
};

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations))
{
}

std::vector<Violation> check(const Scenario& s)
{
    Checker c;

    const auto& t = s.topology;
    c.positive(t.d_v, "d_v");
    c.positive(t.d_tl, "d_tl");
    c.positive(t.d_te, "d_te");
    c.positive(t.d_tr, "d_tr");
    c.positive(t.d_tr_min, "d_tr_min");
    c.positive(t.d_tr_max, "d_tr_max");
    c.require(!(t.d_te >= t.d_tl), "d_te", "must be less than d_tl");
    c.require(!(t.d_tr_min > t.d_tr_max), "d_tr_min", "must not exceed d_tr_max");
    if (t.d_tr > 0.0)
        c.require(t.d_tr >= t.d_tr_min && t.d_tr <= t.d_tr_max, "d_tr", "outside the placement domain");

    const auto& r = s.radio;
    c.require(std::isfinite(r.tx_power_dbm), "tx_power", "must be finite");
    c.require(std::isfinite(r.noise_power_dbm), "noise_power", "must be finite");
    c.require(std::isfinite(r.c0_db), "c0_db", "must be finite");
    c.positive(r.d0, "d0");
    c.require(std::isfinite(r.gamma) && r.gamma >= 2.0, "gamma", "must be at least 2");

    const int n = s.ris.n_elements;
    c.require(n >= 1, "N", "must be positive");
    if (const auto* p = std::get_if<PracticalAmplitude>(&s.ris.amplitude)) {
        c.unit_interval(p->beta_min, "beta_min");
        c.require(std::isfinite(p->phi), "phi", "must be finite");
        c.require(std::isfinite(p->alpha) && p->alpha >= 0.0, "alpha", "must be non-negative");
    }
    if (s.ris.quantization_bits) {
        const int b = *s.ris.quantization_bits;
        c.require(b >= 1 && b <= 8, "b", "outside [1,8]");
    }

    if (const auto* p = std::get_if<PreNullStrategy>(&s.strategy)) {
        c.positive(p->tolerance, "tolerance");
        c.require(p->max_iters >= 1, "max_iters", "must be positive");
        c.require(n >= 2, "N", "pre-nulling needs at least 2 elements");
    }
    if (const auto* a = std::get_if<AnPartitionStrategy>(&s.strategy)) {
        c.require(std::isfinite(a->mu) && a->mu > 0.0 && a->mu < 1.0, "mu", "outside (0,1)");
        c.unit_interval(a->rho, "rho");
    }

    c.require(s.trials >= 1, "trials", "must be positive");

    if (s.channel_override) {
        if (const auto* e = std::get_if<ExplicitChannels>(&*s.channel_override)) {
            const auto len = static_cast<std::size_t>(n < 0 ? 0 : n);
            c.require(e->h.size() == len, "channel_override.h", "length must equal N");
            c.require(e->g.size() == len, "channel_override.g", "length must equal N");
            c.require(e->k.size() == len, "channel_override.k", "length must equal N");
            const bool an = std::holds_alternative<AnPartitionStrategy>(s.strategy);
            c.require(e->h_an.size() == len || (!an && e->h_an.empty()), "channel_override.h_an",
                      an ? "length must equal N" : "must be empty or have length N");
        }
    }

    return c.take();
}

ValidatedScenario validate(const Scenario& s)
{
    auto violations = check(s);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return ValidatedScenario(s);
}

Geometry derive_geometry(const Topology& t)
{
    return {std::hypot(t.d_tr, t.d_v), std::hypot(t.d_tl - t.d_tr, t.d_v), std::hypot(t.d_te - t.d_tr, t.d_v)};
}

int an_group_size(double rho, int n_elements)
{
    return static_cast<int>(std::floor(rho * n_elements + 0.5));
}

const char* strategy_name(const DesignStrategy& s)
{
    switch (s.index()) {
        case 0: return "matched";
        case 1: return "prenull";
        default: return "an_partition";
    }
}

const char* model_name(const AmplitudeModel& m)
{
    return std::holds_alternative<IdealAmplitude>(m) ? "ideal" : "practical";
}

}  // namespace rissec
