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

#ifndef RISDPS_SERIALIZATION_HPP_
#define RISDPS_SERIALIZATION_HPP_

#include "risdps/channel.hpp"
#include "risdps/optimizer.hpp"

#include <json.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace risdps
{

inline constexpr int kSchemaVersion = 1;

void to_json(nlohmann::json &j, const ComplexVec &v);
void from_json(const nlohmann::json &j, ComplexVec &v);

/// A replayable scenario: one realization plus, optionally, its phase set.
///
///     {"schema_version": 1,
///      "h_d": {"re": ..., "im": ...},
///      "v": [{"re": ..., "im": ...}, ...],
///      "phases": [0.5235987755982988, 2.6179938779658]}
struct RealizationDocument
{
    ChannelRealization realization;
    std::optional<PhaseShiftSet> phases;
};

nlohmann::json realization_to_json(const ChannelRealization &real, const PhaseShiftSet *phases = nullptr);

/// Throws std::invalid_argument on a missing or unsupported schema_version
/// or malformed fields.
RealizationDocument realization_from_json(const nlohmann::json &j);

/// {"config": [0 | phase index ...], "h_star": {re, im}, "h_abs": ...,
///  "sector_index": ... (sweep only), "capacity": {...} (with a budget)}
nlohmann::json sweep_result_to_json(const SweepResult &result, const LinkBudget *budget = nullptr);

/// Parses a comma-separated list of radians. Each item is a number or a
/// multiple of pi such as "pi", "5pi/6", "2*pi/3", "0.25".
std::vector<double> parse_phase_list(std::string_view text);

} // namespace risdps

#endif // RISDPS_SERIALIZATION_HPP_
