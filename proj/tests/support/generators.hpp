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

#ifndef RISDPS_TESTS_GENERATORS_HPP_
#define RISDPS_TESTS_GENERATORS_HPP_

#include "risdps/channel.hpp"
#include "risdps/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace risdps::gen
{

/// Small seeded generator of random instances for property tests.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t lo, std::size_t hi)
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    double angle() { return uniform(0.0, kTwoPi); }

    ComplexVec vec(double amp_lo = 0.05, double amp_hi = 2.0)
    {
        return uniform(amp_lo, amp_hi) * unit_from_arg(angle());
    }

    /// Strictly increasing phases with every consecutive gap >= min_gap.
    PhaseShiftSet phase_set(std::size_t k, double min_gap = 1e-3)
    {
        while (true)
        {
            std::vector<double> p(k);
            for (auto &x : p)
                x = angle();
            std::sort(p.begin(), p.end());
            bool ok = true;
            for (std::size_t i = 0; i < k; ++i)
            {
                const double next = i + 1 < k ? p[i + 1] : p[0] + kTwoPi;
                if (k > 1 && next - p[i] < min_gap)
                    ok = false;
            }
            if (ok)
                return PhaseShiftSet(std::move(p));
        }
    }

    /// Realization with n elements of random amplitude and argument; the
    /// direct path is random too and may be weaker or stronger than the
    /// elements.
    ChannelRealization realization(std::size_t n, double direct_scale = 1.0)
    {
        std::vector<ComplexVec> v(n);
        for (auto &e : v)
            e = vec();
        return ChannelRealization(direct_scale * vec(0.0, 2.0), std::move(v));
    }

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace risdps::gen

#endif // RISDPS_TESTS_GENERATORS_HPP_
