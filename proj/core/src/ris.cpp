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

#include "rissec/ris.hpp"

#include <cmath>
#include <numeric>

namespace rissec {
namespace {

struct AmplitudeVisitor
{
    double theta;
    double operator()(const IdealAmplitude&) const { return 1.0; }
    double operator()(const PracticalAmplitude& p) const
    {
        const double shape = (std::sin(theta - p.phi) + 1.0) / 2.0;
        return (1.0 - p.beta_min) * std::pow(shape, p.alpha) + p.beta_min;
    }
};

Complex reflection(const AmplitudeModel& model, double theta)
{
    return std::polar(amplitude(model, theta), theta);
}

void require_same_length(std::size_t a, std::size_t b, const char* what)
{
    if (a != b) throw LengthMismatch(std::string(what) + ": vector lengths differ");
}

/// -arg(a_i b_i), counting exact zeros (phase 0 is used for them).
void conjugate_phases(const ComplexVector& a, const ComplexVector& b, std::size_t first, std::size_t last,
                      std::vector<double>& out, int& degenerate)
{
    for (std::size_t i = first; i < last; ++i) {
        const Complex p = a[i] * b[i];
        if (p == Complex{}) {
            out[i] = 0.0;
            ++degenerate;
        } else {
            out[i] = wrap_phase(-std::arg(p));
        }
    }
}

}  // namespace

double amplitude(const AmplitudeModel& model, double theta) { return std::visit(AmplitudeVisitor{theta}, model); }

RisProfile make_profile(std::vector<double> theta, const AmplitudeModel& model, std::string strategy)
{
    RisProfile p;
    p.strategy = std::move(strategy);
    p.beta.resize(theta.size());
    p.psi.resize(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        theta[i] = wrap_phase(theta[i]);
        p.beta[i] = amplitude(model, theta[i]);
        p.psi[i] = std::polar(p.beta[i], theta[i]);
    }
    p.theta = std::move(theta);
    return p;
}

Complex cascaded_gain(std::span<const Complex> psi, std::span<const Complex> a, std::span<const Complex> b)
{
    require_same_length(psi.size(), a.size(), "cascaded_gain");
    require_same_length(psi.size(), b.size(), "cascaded_gain");
    Complex sum{};
    for (std::size_t i = 0; i < psi.size(); ++i)
        sum += a[i] * psi[i] * b[i];
    return sum;
}

RisProfile design_matched(const ChannelRealization& ch, const AmplitudeModel& model)
{
    require_same_length(ch.h.size(), ch.g.size(), "design_matched");
    const auto n = ch.h.size();
    std::vector<double> theta(n);
    int degenerate = 0;
    conjugate_phases(ch.h, ch.g, 0, n, theta, degenerate);
    auto p = make_profile(std::move(theta), model, "matched");
    p.degenerate_elements = degenerate;
    return p;
}

double leakage_ratio(std::span<const Complex> xi, std::span<const Complex> psi)
{
    require_same_length(xi.size(), psi.size(), "leakage_ratio");
    double norm2 = 0.0;
    Complex dot{};
    for (std::size_t i = 0; i < xi.size(); ++i) {
        norm2 += std::norm(xi[i]);
        dot += xi[i] * psi[i];
    }
    if (norm2 == 0.0) return 0.0;
    return std::norm(dot) / (norm2 * static_cast<double>(xi.size()));
}

std::vector<double> spread_phases(std::size_t n)
{
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    std::vector<double> theta(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double frac = std::fmod(static_cast<double>(i) * golden, 1.0);
        theta[i] = wrap_phase(2.0 * kPi * frac);
    }
    return theta;
}

NullingResult null_steer(std::span<const Complex> xi, std::vector<double> initial_theta, const PreNullStrategy& opts,
                         const AmplitudeModel& model)
{
    require_same_length(xi.size(), initial_theta.size(), "null_steer");
    const auto n = xi.size();

    NullingResult out;
    out.profile = make_profile(std::move(initial_theta), model, "prenull");
    auto& theta = out.profile.theta;
    auto& psi = out.profile.psi;

    const double norm2 = std::accumulate(xi.begin(), xi.end(), 0.0,
                                         [](double acc, const Complex& z) { return acc + std::norm(z); });

    double residual = leakage_ratio(xi, psi);
    out.residual_history.push_back(residual);

    int it = 0;
    while (residual > opts.tolerance && it < opts.max_iters) {
        // Orthogonal projection onto the null space of xi^T.
        Complex dot{};
        for (std::size_t i = 0; i < n; ++i)
            dot += xi[i] * psi[i];
        const Complex step = dot / norm2;
        for (std::size_t i = 0; i < n; ++i)
            psi[i] -= std::conj(xi[i]) * step;

        // Back onto the feasible reflection set; a zero element keeps its phase.
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(psi[i]) > 0.0) theta[i] = std::arg(psi[i]);
            psi[i] = reflection(model, theta[i]);
        }

        ++it;
        residual = leakage_ratio(xi, psi);
        out.residual_history.push_back(residual);
    }

    for (std::size_t i = 0; i < n; ++i)
        out.profile.beta[i] = amplitude(model, theta[i]);
    out.iterations = it;
    out.residual = residual;
    out.converged = residual <= opts.tolerance;
    return out;
}

NullingResult design_prenull(const ChannelRealization& ch, const PreNullStrategy& opts, const AmplitudeModel& model)
{
    require_same_length(ch.h.size(), ch.k.size(), "design_prenull");
    const auto n = ch.h.size();
    ComplexVector xi(n);
    for (std::size_t i = 0; i < n; ++i)
        xi[i] = ch.h[i] * ch.k[i];

    std::vector<double> init;
    int degenerate = 0;
    if (opts.init == NullingInit::Matched) {
        auto m = design_matched(ch, model);
        init = std::move(m.theta);
        degenerate = m.degenerate_elements;
    } else {
        init = spread_phases(n);
    }
    auto out = null_steer(xi, std::move(init), opts, model);
    out.profile.degenerate_elements = degenerate;
    return out;
}

RisProfile design_an_partition(const ChannelRealization& ch, double rho, AnPhaseChannel phase_channel,
                               const AmplitudeModel& model)
{
    const auto n = ch.h.size();
    require_same_length(n, ch.g.size(), "design_an_partition");
    require_same_length(n, ch.k.size(), "design_an_partition");
    const auto& steer = phase_channel == AnPhaseChannel::AnAntenna ? ch.h_an : ch.h;
    require_same_length(n, steer.size(), "design_an_partition");

    const auto group = static_cast<std::size_t>(an_group_size(rho, static_cast<int>(n)));
    std::vector<double> theta(n);
    int degenerate = 0;
    conjugate_phases(steer, ch.k, 0, group, theta, degenerate);
    conjugate_phases(ch.h, ch.g, group, n, theta, degenerate);
    auto p = make_profile(std::move(theta), model, "an_partition");
    p.degenerate_elements = degenerate;
    return p;
}

std::vector<double> phase_codebook(int bits)
{
    if (bits < 1 || bits > 8) throw std::invalid_argument("phase_codebook: bits outside [1,8]");
    const int m = 1 << bits;
    std::vector<double> cb(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        cb[static_cast<std::size_t>(k)] = -kPi + (2 * k + 1) * kPi / m;
    return cb;
}

int nearest_codeword(double theta, int bits)
{
    const int m = 1 << bits;
    const double step = 2.0 * kPi / m;
    const double t = wrap_phase(theta);
    const auto lower = static_cast<int>(std::floor((t + kPi) / step - 0.5));
    int a = ((lower % m) + m) % m;
    int b = (a + 1) % m;
    if (b < a) std::swap(a, b);
    const double da = angular_distance(t, -kPi + (2 * a + 1) * kPi / m);
    const double db = angular_distance(t, -kPi + (2 * b + 1) * kPi / m);
    return db < da ? b : a;
}

RisProfile quantize_phases(const RisProfile& p, int bits, const AmplitudeModel& model)
{
    const auto codebook = phase_codebook(bits);
    std::vector<double> theta(p.theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i)
        theta[i] = codebook[static_cast<std::size_t>(nearest_codeword(p.theta[i], bits))];
    auto q = make_profile(std::move(theta), model, p.strategy);
    q.quantization_bits = bits;
    q.degenerate_elements = p.degenerate_elements;
    return q;
}

DesignOutcome design(const Scenario& s, const ChannelRealization& ch)
{
    const auto& model = s.ris.amplitude;
    DesignOutcome out;
    if (const auto* pn = std::get_if<PreNullStrategy>(&s.strategy)) {
        out.nulling = design_prenull(ch, *pn, model);
        out.profile = out.nulling->profile;
    } else if (const auto* an = std::get_if<AnPartitionStrategy>(&s.strategy)) {
        out.profile = design_an_partition(ch, an->rho, an->phase_channel, model);
    } else {
        out.profile = design_matched(ch, model);
    }

    if (s.ris.quantization_bits) out.profile = quantize_phases(out.profile, *s.ris.quantization_bits, model);

    if (out.nulling) {
        ComplexVector xi(ch.size());
        for (std::size_t i = 0; i < xi.size(); ++i)
            xi[i] = ch.h[i] * ch.k[i];
        out.quantized_residual = leakage_ratio(xi, out.profile.psi);
    }
    return out;
}

}  // namespace rissec
