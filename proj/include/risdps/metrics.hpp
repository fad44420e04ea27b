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

#ifndef RISDPS_METRICS_HPP_
#define RISDPS_METRICS_HPP_

#include "risdps/channel.hpp"
#include "risdps/geometry.hpp"

namespace risdps
{

struct CapacityReport
{
    double snr_linear = 0.0;
    double capacity_bps = 0.0;
    double spectral_efficiency = 0.0; // bits/s/Hz
};

/// Shannon capacity B log2(1 + SNR) with SNR = 10^(snr_budget_db/10) |h|^2.
CapacityReport capacity(const ComplexVec &h, const LinkBudget &budget);

/// 100 (proposed - cpp) / cpp. Throws std::invalid_argument unless cpp > 0.
double performance_gain(double c_proposed, double c_cpp);

} // namespace risdps

#endif // RISDPS_METRICS_HPP_
