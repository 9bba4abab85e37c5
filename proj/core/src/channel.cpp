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

#include "rissec/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace rissec {
namespace {

ComplexVector draw_link(const SubstreamKey& key, Link link, std::size_t n, double loss)
{
    auto engine = make_engine(key, link);
    const double scale = std::sqrt(loss);
    ComplexVector v(n);
    for (auto& z : v)
        z = scale * complex_normal(engine);
    return v;
}

}  // namespace

PathLossModel PathLossModel::from(const RadioParams& r) { return {db_to_linear(r.c0_db), r.d0, r.gamma}; }

double path_loss(const PathLossModel& m, double distance)
{
    if (!(distance > 0.0)) throw std::domain_error("path_loss: distance must be positive");
    return m.c0_linear * std::pow(distance / m.d0, -m.gamma);
}

ChannelRealization draw_channels(const ValidatedScenario& vs, const SubstreamKey& key)
{
    const Scenario& s = vs.get();
    const auto n = static_cast<std::size_t>(s.ris.n_elements);
    const bool with_an = std::holds_alternative<AnPartitionStrategy>(s.strategy);

    if (s.channel_override) {
        if (const auto* e = std::get_if<ExplicitChannels>(&*s.channel_override)) {
            ChannelRealization ch{e->h, e->h_an, e->g, e->k};
            if (!with_an) ch.h_an.clear();
            return ch;
        }
    }

    const auto geo = derive_geometry(s.topology);
    const auto model = PathLossModel::from(s.radio);
    const double l_h = path_loss(model, geo.d_t_ris);
    const double l_g = path_loss(model, geo.d_ris_rx);
    const double l_k = path_loss(model, geo.d_ris_ev);

    if (s.channel_override) {  // unit gain: z = 1 + 0j
        ChannelRealization ch;
        ch.h.assign(n, Complex(std::sqrt(l_h), 0.0));
        ch.g.assign(n, Complex(std::sqrt(l_g), 0.0));
        ch.k.assign(n, Complex(std::sqrt(l_k), 0.0));
        if (with_an) ch.h_an.assign(n, Complex(std::sqrt(l_h), 0.0));
        return ch;
    }

    ChannelRealization ch;
    ch.h = draw_link(key, Link::TxToRis, n, l_h);
    ch.g = draw_link(key, Link::RisToReceiver, n, l_g);
    ch.k = draw_link(key, Link::RisToEavesdropper, n, l_k);
    if (with_an) ch.h_an = draw_link(key, Link::AnTxToRis, n, l_h);
    return ch;
}

}  // namespace rissec
