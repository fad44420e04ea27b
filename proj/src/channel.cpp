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

#include "risdps/channel.hpp"

#include <stdexcept>
#include <string>

namespace risdps
{

PhaseShiftSet::PhaseShiftSet(std::vector<double> phases) : phases_(std::move(phases))
{
    if (phases_.empty())
        throw std::invalid_argument("phase shift set must contain at least one phase");
    for (std::size_t i = 0; i < phases_.size(); ++i)
    {
        const double p = phases_[i];
        if (!std::isfinite(p) || p < 0.0 || p >= kTwoPi)
            throw std::invalid_argument("phase " + std::to_string(i + 1) + " outside [0, 2pi)");
        if (i > 0 && !(phases_[i - 1] < p))
            throw std::invalid_argument("phases must be strictly increasing");
    }
    phasors_.reserve(phases_.size());
    for (double p : phases_)
        phasors_.push_back({std::cos(p), std::sin(p)});
}

PhaseShiftSet PhaseShiftSet::uniform(std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("uniform phase set needs k >= 1");
    std::vector<double> p(k);
    for (std::size_t i = 0; i < k; ++i)
        p[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(k);
    return PhaseShiftSet(std::move(p));
}

double PhaseShiftSet::phase(std::size_t i) const
{
    if (i == 0 || i > phases_.size())
        throw std::out_of_range("phase index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(phases_.size()));
    return phases_[i - 1];
}

double PhaseShiftSet::gap(std::size_t i) const
{
    const double from = phase(i);
    if (i == phases_.size())
        return phases_.front() + kTwoPi - from;
    return phases_[i] - from;
}

void LinkBudget::validate() const
{
    if (!std::isfinite(gain_tx_ris_db) || !std::isfinite(gain_ris_rx_db) ||
        !std::isfinite(gain_direct_db) || !std::isfinite(snr_budget_db))
        throw std::invalid_argument("link budget dB values must be finite");
    if (!std::isfinite(bandwidth_hz) || bandwidth_hz <= 0.0)
        throw std::invalid_argument("bandwidth must be positive");
}

double db_to_amplitude(double db)
{
    return std::pow(10.0, db / 20.0);
}

double LinkBudget::element_amplitude() const
{
    return db_to_amplitude(gain_tx_ris_db + gain_ris_rx_db);
}

double LinkBudget::direct_amplitude() const
{
    return db_to_amplitude(gain_direct_db);
}

double LinkBudget::snr_budget_linear() const
{
    return std::pow(10.0, snr_budget_db / 10.0);
}

ElementChoice ElementChoice::on(std::size_t phase_index)
{
    if (phase_index == 0)
        throw std::invalid_argument("phase indices are 1-based");
    return ElementChoice(phase_index);
}

ChannelRealization::ChannelRealization(ComplexVec h_d, std::vector<ComplexVec> v) : h_d_(h_d)
{
    v_.reserve(v.size());
    for (std::size_t n = 0; n < v.size(); ++n)
    {
        if (v[n].re == 0.0 && v[n].im == 0.0)
            dropped_.push_back(n);
        else
            v_.push_back(v[n]);
    }
}

ComplexVec f_vector(const ComplexVec &v_n, const PhaseShiftSet &set, std::size_t i)
{
    if (i == 0 || i > set.size())
        throw std::out_of_range("phase index " + std::to_string(i) + " out of range");
    const ComplexVec &u = set.phasor(i);
    return {v_n.re * u.re - v_n.im * u.im, v_n.re * u.im + v_n.im * u.re};
}

ComplexVec realize_g(const ComplexVec &v_n, const PhaseShiftSet &set, ElementChoice choice)
{
    if (choice.is_off())
        return {};
    return f_vector(v_n, set, choice.code());
}

ComplexVec overall_h(const ChannelRealization &real, const PhaseShiftSet &set,
                     std::span<const ElementChoice> cfg)
{
    if (cfg.size() != real.size())
        throw std::invalid_argument("configuration length " + std::to_string(cfg.size()) +
                                    " does not match element count " + std::to_string(real.size()));
    ComplexVec h = real.direct();
    for (std::size_t n = 0; n < cfg.size(); ++n)
        h += realize_g(real.element(n), set, cfg[n]);
    return h;
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream)
{
    // splitmix64 finalizer over a golden-ratio combination of both inputs
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform_angle(Rng &rng)
{
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return wrap_2pi(u * kTwoPi);
}

ChannelRealization sample_realization(const LinkBudget &budget, std::size_t n, std::uint64_t rng_seed)
{
    budget.validate();
    Rng rng(rng_seed);
    const double amp = budget.element_amplitude();
    std::vector<ComplexVec> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(amp * unit_from_arg(uniform_angle(rng)));
    return ChannelRealization({budget.direct_amplitude(), 0.0}, std::move(v));
}

} // namespace risdps
