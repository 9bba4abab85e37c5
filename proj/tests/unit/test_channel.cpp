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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "rissec/channel.hpp"
#include "rissec/presets.hpp"
#include "rissec/rng.hpp"

using namespace rissec;

namespace {

Scenario baseline() { return preset("baseline").scenario; }

}  // namespace

TEST(PathLoss, HandEvaluatedValues)
{
    const PathLossModel m3{.c0_linear = 1e-3, .d0 = 1.0, .gamma = 3.0};
    const PathLossModel m35{.c0_linear = 1e-3, .d0 = 1.0, .gamma = 3.5};
    EXPECT_NEAR(path_loss(m3, 10.0), 1e-6, 1e-18);
    EXPECT_DOUBLE_EQ(path_loss(m3, 1.0), 1e-3);
    EXPECT_NEAR(path_loss(m35, 10.0), 3.1623e-7, 1e-11);
    EXPECT_NEAR(path_loss(m3, std::sqrt(200.0)), 3.5355e-7, 1e-11);
}

TEST(PathLoss, FromRadioParams)
{
    const auto m = PathLossModel::from(baseline().radio);
    EXPECT_DOUBLE_EQ(m.c0_linear, 1e-3);
    EXPECT_DOUBLE_EQ(m.d0, 1.0);
    EXPECT_DOUBLE_EQ(m.gamma, 3.0);
}

TEST(PathLoss, RejectsNonPositiveDistance)
{
    const PathLossModel m{.c0_linear = 1e-3, .d0 = 1.0, .gamma = 3.0};
    EXPECT_THROW(path_loss(m, 0.0), std::domain_error);
    EXPECT_THROW(path_loss(m, -1.0), std::domain_error);
}

TEST(PathLoss, LargerExponentNeverIncreasesLossBeyondReference)
{
    for (double g = 2.0; g <= 4.0; g += 0.25)
        for (double d = 1.01; d < 100.0; d *= 1.3) {
            const PathLossModel a{.c0_linear = 1e-3, .d0 = 1.0, .gamma = g};
            const PathLossModel b{.c0_linear = 1e-3, .d0 = 1.0, .gamma = 2.0 * g};
            EXPECT_LE(path_loss(b, d), path_loss(a, d));
        }
}

TEST(Rng, ComplexNormalHasUnitVariance)
{
    auto e = make_engine(SubstreamKey{7, 0, 0}, Link::TxToRis);
    constexpr int n = 100000;
    double re = 0.0, im = 0.0, p = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto z = complex_normal(e);
        re += z.real();
        im += z.imag();
        p += std::norm(z);
    }
    EXPECT_NEAR(re / n, 0.0, 3.0 * std::sqrt(0.5 / n));
    EXPECT_NEAR(im / n, 0.0, 3.0 * std::sqrt(0.5 / n));
    EXPECT_NEAR(p / n, 1.0, 3.0 / std::sqrt(n));
}

TEST(Rng, SubstreamsAreDistinctAndReproducible)
{
    auto a = make_engine(SubstreamKey{1, 0, 5}, Link::TxToRis);
    auto b = make_engine(SubstreamKey{1, 0, 5}, Link::TxToRis);
    auto c = make_engine(SubstreamKey{1, 0, 6}, Link::TxToRis);
    auto d = make_engine(SubstreamKey{1, 0, 5}, Link::RisToReceiver);
    const auto xa = a();
    EXPECT_EQ(xa, b());
    EXPECT_NE(xa, c());
    EXPECT_NE(xa, d());
    for (int i = 0; i < 1000; ++i) {
        const double u = uniform01(a);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(DrawChannels, UnitGainOverrideFillsSquareRootPathLoss)
{
    auto s = baseline();
    s.ris.n_elements = 8;
    s.channel_override = UnitGainOverride{};
    const auto ch = draw_channels(validate(s), SubstreamKey{1, 0, 0});
    ASSERT_EQ(ch.size(), 8u);
    const double expect_h = std::sqrt(1e-3 * std::pow(200.0, -1.5));
    const double expect_k = std::sqrt(1e-3 * std::pow(125.0, -1.5));
    for (std::size_t i = 0; i < ch.size(); ++i) {
        EXPECT_DOUBLE_EQ(ch.h[i].real(), expect_h);
        EXPECT_DOUBLE_EQ(ch.h[i].imag(), 0.0);
        EXPECT_DOUBLE_EQ(ch.g[i].real(), expect_h);
        EXPECT_DOUBLE_EQ(ch.k[i].real(), expect_k);
    }
    EXPECT_TRUE(ch.h_an.empty());
}

TEST(DrawChannels, ExplicitOverrideIsReturnedVerbatim)
{
    auto s = baseline();
    s.ris.n_elements = 2;
    const ExplicitChannels ex{{{1, 0}, {0, 1}}, {}, {{2, 0}, {0, -2}}, {{1, 1}, {1, -1}}};
    s.channel_override = ex;
    const auto ch = draw_channels(validate(s), SubstreamKey{});
    EXPECT_EQ(ch.h, ex.h);
    EXPECT_EQ(ch.g, ex.g);
    EXPECT_EQ(ch.k, ex.k);
}

TEST(DrawChannels, SameKeyGivesIdenticalRealization)
{
    auto s = baseline();
    s.strategy = AnPartitionStrategy{.mu = 0.5, .rho = 0.3};
    const auto v = validate(s);
    const auto a = draw_channels(v, SubstreamKey{99, 3, 17});
    const auto b = draw_channels(v, SubstreamKey{99, 3, 17});
    EXPECT_EQ(a.h, b.h);
    EXPECT_EQ(a.h_an, b.h_an);
    EXPECT_EQ(a.g, b.g);
    EXPECT_EQ(a.k, b.k);
    EXPECT_EQ(a.h_an.size(), a.h.size());
    const auto c = draw_channels(v, SubstreamKey{99, 3, 18});
    EXPECT_NE(a.h, c.h);
}

TEST(DrawChannels, PrefixIsSharedAcrossElementCounts)
{
    auto s = baseline();
    s.ris.n_elements = 10;
    const auto small = draw_channels(validate(s), SubstreamKey{5, 0, 2});
    s.ris.n_elements = 100;
    const auto large = draw_channels(validate(s), SubstreamKey{5, 0, 2});
    for (std::size_t i = 0; i < small.size(); ++i) {
        EXPECT_EQ(small.h[i], large.h[i]);
        EXPECT_EQ(small.g[i], large.g[i]);
        EXPECT_EQ(small.k[i], large.k[i]);
    }
}

TEST(DrawChannels, MeanPowerMatchesPathLossWithinThreeStandardErrors)
{
    auto s = baseline();
    s.ris.n_elements = 1;
    const auto v = validate(s);
    constexpr int n = 100000;
    double sum = 0.0;
    for (int t = 0; t < n; ++t)
        sum += std::norm(draw_channels(v, SubstreamKey{11, 0, static_cast<std::uint64_t>(t)}).g[0]);
    const double expected = 3.536e-7;
    // |g|^2 is exponential, so its standard deviation equals its mean.
    EXPECT_NEAR(sum / n, expected, 3.0 * expected / std::sqrt(n));
}

TEST(DrawChannels, LinksAreUncorrelated)
{
    auto s = baseline();
    s.ris.n_elements = 1;
    const auto v = validate(s);
    constexpr int n = 100000;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (int t = 0; t < n; ++t) {
        const auto ch = draw_channels(v, SubstreamKey{12, 0, static_cast<std::uint64_t>(t)});
        const double x = ch.h[0].real(), y = ch.g[0].real();
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    const double cov = sxy / n - (sx / n) * (sy / n);
    const double corr = cov / std::sqrt((sxx / n - (sx / n) * (sx / n)) * (syy / n - (sy / n) * (sy / n)));
    EXPECT_NEAR(corr, 0.0, 3.0 / std::sqrt(n));
}
