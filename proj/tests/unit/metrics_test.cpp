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

#include "risdps/metrics.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace risdps;

TEST(Capacity, ShannonFormula)
{
    LinkBudget b;
    b.snr_budget_db = 0.0;
    b.bandwidth_hz = 2.0;
    const auto r = capacity({1.0, 0.0}, b);
    EXPECT_DOUBLE_EQ(r.snr_linear, 1.0);
    EXPECT_DOUBLE_EQ(r.spectral_efficiency, 1.0);
    EXPECT_DOUBLE_EQ(r.capacity_bps, 2.0);
    EXPECT_DOUBLE_EQ(capacity({}, b).spectral_efficiency, 0.0);
}

TEST(Capacity, DefaultBudget)
{
    // |h| = 1e-5 at 100 dB gives SNR 1
    const auto r = capacity({1e-5, 0.0}, LinkBudget{});
    EXPECT_NEAR(r.snr_linear, 1.0, 1e-12);
    EXPECT_NEAR(r.spectral_efficiency, 1.0, 1e-12);
}

TEST(Capacity, MonotoneInAmplitude)
{
    const LinkBudget b;
    double prev = -1.0;
    for (double a = 0.0; a < 1e-5; a += 1e-7)
    {
        const double se = capacity({0.0, a}, b).spectral_efficiency;
        EXPECT_GT(se, prev);
        prev = se;
    }
}

TEST(PerformanceGain, Percentages)
{
    EXPECT_DOUBLE_EQ(performance_gain(1.15, 1.0), 14.999999999999991);
    EXPECT_DOUBLE_EQ(performance_gain(2.0, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(performance_gain(1.0, 2.0), -50.0);
    EXPECT_THROW(performance_gain(1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(performance_gain(1.0, -1.0), std::invalid_argument);
}
