// SPDX-License-Identifier: Apache-2.0
//
// ris-dps: optimal configuration of reconfigurable intelligent surfaces
// with arbitrary discrete phase shifts
// Copyright (C) 2026 The ris-dps authors
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

#include "risdps/analysis.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

using namespace risdps;

namespace
{
const PhaseShiftSet kSixths({kPi / 6.0, 5.0 * kPi / 6.0});
}

TEST(EmptyRegionWidth, ArcsineValues)
{
    EXPECT_NEAR(omega_small_gap(0.1, 0.0, kPi / 3.0, 1.0), 0.050020856805770015, 1e-16);
    EXPECT_NEAR(omega_large_gap(0.1, 1.0), 0.050020856805770015, 1e-16);
    EXPECT_DOUBLE_EQ(omega_large_gap(4.0, 1.0), kHalfPi);
    EXPECT_DOUBLE_EQ(omega_small_gap(1.0, 0.0, kPi, 0.5), kHalfPi);
    EXPECT_THROW(omega_large_gap(1.0, 0.0), std::domain_error);
    EXPECT_THROW(omega_small_gap(1.0, 0.0, 1.0, -1.0), std::domain_error);
}

TEST(EmptyRatioBound, LargeElementLimit)
{
    EXPECT_NEAR(empty_ratio_upper_bound_approx(2), 0.6366197723675814, 1e-15);
    EXPECT_NEAR(empty_ratio_upper_bound_approx(3), 0.8269933431326881, 1e-15);
    EXPECT_NEAR(empty_ratio_upper_bound_approx(4), 0.9003163161571061, 1e-15);
    EXPECT_NEAR(empty_ratio_upper_bound_approx(1), 0.0, 1e-15);
    EXPECT_THROW(empty_ratio_upper_bound_approx(0), std::invalid_argument);
}

TEST(ArcUnion, SimpleCases)
{
    const std::vector<CircularArc> none;
    EXPECT_DOUBLE_EQ(arc_union_length(none), 0.0);
    const std::vector<CircularArc> disjoint{{1.0, 0.1}, {2.0, 0.2}};
    EXPECT_NEAR(arc_union_length(disjoint), 0.6, 1e-15);
    const std::vector<CircularArc> nested{{1.0, 0.3}, {1.1, 0.1}};
    EXPECT_NEAR(arc_union_length(nested), 0.6, 1e-15);
    const std::vector<CircularArc> across_zero{{0.0, 0.2}, {kTwoPi - 0.1, 0.2}};
    EXPECT_NEAR(arc_union_length(across_zero), 0.5, 1e-14);
    const std::vector<CircularArc> full{{0.0, kPi}};
    EXPECT_DOUBLE_EQ(arc_union_length(full), kTwoPi);
}

TEST(ArcUnion, Contains)
{
    const CircularArc a{0.1, 0.2};
    EXPECT_TRUE(a.contains(kTwoPi - 0.05));
    EXPECT_FALSE(a.contains(0.35));
    EXPECT_FALSE(a.contains(0.29, 0.02));
    EXPECT_NEAR(a.begin(), kTwoPi - 0.1, 1e-15);
}

TEST(ArcUnionProperty, MatchesDenseGrid)
{
    gen::Gen g(51);
    const int grid = 100000;
    for (int t = 0; t < 30; ++t)
    {
        std::vector<CircularArc> arcs(g.index(1, 40));
        for (auto &a : arcs)
            a = CircularArc{g.angle(), g.uniform(0.0, 0.3)};
        int covered = 0;
        for (int i = 0; i < grid; ++i)
        {
            const double x = (i + 0.5) * kTwoPi / grid;
            for (const auto &a : arcs)
                if (a.contains(x))
                {
                    ++covered;
                    break;
                }
        }
        EXPECT_NEAR(arc_union_length(arcs) / kTwoPi, static_cast<double>(covered) / grid, 1e-3);
    }
}

TEST(EmptyRegions, OnePerLine)
{
    gen::Gen g(52);
    const auto real = g.realization(50);
    const auto regions = empty_regions(real, kSixths, 10.0);
    EXPECT_EQ(regions.size(), 150u);
    for (const auto &r : regions)
    {
        EXPECT_GE(r.half_width, 0.0);
        EXPECT_LE(r.half_width, kHalfPi);
        EXPECT_EQ(r.interval.center, r.line.argument);
    }
    EXPECT_TRUE(empty_regions(ChannelRealization({1.0, 0.0}, {}), kSixths, 1.0).empty());
    EXPECT_THROW(empty_regions(real, kSixths, 0.0), std::domain_error);
}

TEST(EmptyRegions, RatioReport)
{
    gen::Gen g(53);
    const auto a = analyze_realization(g.realization(40), PhaseShiftSet::uniform(3));
    EXPECT_GT(a.report.measured_ratio, 0.0);
    EXPECT_LE(a.report.measured_ratio, a.report.sum_ratio_ub + 1e-15);
    EXPECT_GE(a.report.overlap_fraction, 0.0);
    EXPECT_LT(a.report.overlap_fraction, 1.0);
    EXPECT_EQ(a.h_star_amp, a.sweep.amplitude());

    const auto b = analyze_realization(g.realization(40), PhaseShiftSet::uniform(3), HStarSource::kContinuousBound);
    EXPECT_GT(b.h_star_amp, b.sweep.amplitude() * (1.0 - 1e-12));
}

TEST(EmptyRegionsProperty, OptimumAvoidsEveryRegion)
{
    gen::Gen g(54);
    for (int t = 0; t < 200; ++t)
    {
        const auto set = g.phase_set(g.index(1, 4));
        const auto real = g.realization(g.index(1, 30), g.uniform(0.0, 2.0));
        const auto a = analyze_realization(real, set);
        const double arg = arg_mod_2pi(a.sweep.h_star);
        for (const auto &r : a.regions)
            EXPECT_FALSE(r.interval.contains(arg, 1e-9)) << "trial " << t;
    }
}

TEST(RegionsCsv, Format)
{
    const ChannelRealization r({10.0, 0.0}, {{1.0, 0.0}});
    std::ostringstream os;
    write_regions_csv(os, empty_regions(r, kSixths, 10.0));
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "center_rad,half_width_rad,element,kind");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    EXPECT_EQ(rows, 3);
    EXPECT_NE(os.str().find(",0,off_entry"), std::string::npos);
}
