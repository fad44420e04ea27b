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

#include "risdps/serialization.hpp"

#include "risdps/metrics.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

namespace risdps
{

void to_json(nlohmann::json &j, const ComplexVec &v)
{
    j = nlohmann::json{{"re", v.re}, {"im", v.im}};
}

void from_json(const nlohmann::json &j, ComplexVec &v)
{
    v.re = j.at("re").get<double>();
    v.im = j.at("im").get<double>();
}

nlohmann::json realization_to_json(const ChannelRealization &real, const PhaseShiftSet *phases)
{
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["h_d"] = real.direct();
    j["v"] = real.elements();
    if (phases)
        j["phases"] = phases->phases();
    return j;
}

RealizationDocument realization_from_json(const nlohmann::json &j)
{
    try
    {
        if (!j.contains("schema_version"))
            throw std::invalid_argument("realization document lacks schema_version");
        const int version = j.at("schema_version").get<int>();
        if (version != kSchemaVersion)
            throw std::invalid_argument("unsupported schema_version " + std::to_string(version));
        RealizationDocument doc{ChannelRealization(j.at("h_d").get<ComplexVec>(),
                                                   j.at("v").get<std::vector<ComplexVec>>()),
                                std::nullopt};
        if (j.contains("phases"))
            doc.phases.emplace(j.at("phases").get<std::vector<double>>());
        return doc;
    }
    catch (const nlohmann::json::exception &e)
    {
        throw std::invalid_argument(std::string("malformed realization document: ") + e.what());
    }
}

nlohmann::json sweep_result_to_json(const SweepResult &result, const LinkBudget *budget)
{
    nlohmann::json j;
    std::vector<std::size_t> codes;
    codes.reserve(result.config.size());
    for (auto c : result.config)
        codes.push_back(c.code());
    j["config"] = codes;
    j["h_star"] = result.h_star;
    j["h_abs"] = result.amplitude();
    if (result.sector_index)
        j["sector_index"] = *result.sector_index;
    if (budget)
    {
        const CapacityReport cap = capacity(result.h_star, *budget);
        j["capacity"] = {{"snr_linear", cap.snr_linear},
                         {"spectral_efficiency", cap.spectral_efficiency},
                         {"capacity_bps", cap.capacity_bps}};
    }
    return j;
}

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view s, std::string_view item)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("cannot parse phase '" + std::string(item) + "'");
    return value;
}

double parse_phase(std::string_view item)
{
    std::string_view s = trim(item);
    if (s.empty())
        throw std::invalid_argument("empty phase in list");

    double denom = 1.0;
    if (const auto slash = s.find('/'); slash != std::string_view::npos)
    {
        denom = parse_number(trim(s.substr(slash + 1)), item);
        s = trim(s.substr(0, slash));
        if (denom == 0.0)
            throw std::invalid_argument("zero denominator in phase '" + std::string(item) + "'");
    }

    double value = 0.0;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi")
    {
        std::string_view coeff = trim(s.substr(0, s.size() - 2));
        if (!coeff.empty() && coeff.back() == '*')
            coeff = trim(coeff.substr(0, coeff.size() - 1));
        value = (coeff.empty() ? 1.0 : parse_number(coeff, item)) * kPi;
    }
    else
    {
        value = parse_number(s, item);
    }
    return value / denom;
}

} // namespace

std::vector<double> parse_phase_list(std::string_view text)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size())
    {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_phase(text.substr(start, end - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace risdps
