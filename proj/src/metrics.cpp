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

#include <cmath>
#include <stdexcept>

namespace risdps
{

CapacityReport capacity(const ComplexVec &h, const LinkBudget &budget)
{
    CapacityReport r;
    r.snr_linear = budget.snr_budget_linear() * h.norm();
    r.spectral_efficiency = std::log2(1.0 + r.snr_linear);
    r.capacity_bps = budget.bandwidth_hz * r.spectral_efficiency;
    return r;
}

double performance_gain(double c_proposed, double c_cpp)
{
    if (!(c_cpp > 0.0))
        throw std::invalid_argument("performance gain needs a positive baseline capacity");
    return 100.0 * (c_proposed - c_cpp) / c_cpp;
}

} // namespace risdps
