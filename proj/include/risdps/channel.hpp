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

#ifndef RISDPS_CHANNEL_HPP_
#define RISDPS_CHANNEL_HPP_

#include "risdps/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace risdps
{

/**
 * The K candidate phase shifts shared by every element, strictly increasing
 * inside [0, 2pi).
 *
 * Phase indices used throughout the public API are 1-based (1..K) so that
 * index 0 is free to mean "element switched off" in serialized
 * configurations.
 */
class PhaseShiftSet
{
public:
    /// Throws std::invalid_argument unless 0 <= p1 < p2 < ... < pK < 2pi and K >= 1.
    explicit PhaseShiftSet(std::vector<double> phases);

    /// K evenly spaced phases {0, 2pi/K, ..., (K-1)2pi/K}.
    static PhaseShiftSet uniform(std::size_t k);

    std::size_t size() const { return phases_.size(); }

    /// Phase with 1-based index `i`; throws std::out_of_range.
    double phase(std::size_t i) const;

    const std::vector<double> &phases() const { return phases_; }

    /// e^{j phase(i)} as a vector; precomputed at construction.
    const ComplexVec &phasor(std::size_t i) const { return phasors_.at(i - 1); }

    /// Counterclockwise gap from phase i to phase i+1 (1-based; phase K+1 is
    /// phase 1 shifted by 2pi). Gaps sum to 2pi.
    double gap(std::size_t i) const;

    /// Index following `i` cyclically (K -> 1).
    std::size_t next_index(std::size_t i) const { return i == size() ? 1 : i + 1; }

    friend bool operator==(const PhaseShiftSet &, const PhaseShiftSet &) = default;

private:
    std::vector<double> phases_;
    std::vector<ComplexVec> phasors_;
};

/// Link-level constants of the simulation. All gains are in dB of power, so
/// the corresponding amplitude is 10^(dB/20).
struct LinkBudget
{
    double gain_tx_ris_db = -80.0;
    double gain_ris_rx_db = -60.0;
    double gain_direct_db = -140.0;
    double snr_budget_db = 100.0; // P / (B N0)
    double bandwidth_hz = 1.0;

    /// Throws std::invalid_argument on non-finite fields or bandwidth <= 0.
    void validate() const;

    double element_amplitude() const;
    double direct_amplitude() const;
    double snr_budget_linear() const;
};

double db_to_amplitude(double db);

/// Per-element decision: OFF (amplitude 0) or ON with a 1-based phase index.
class ElementChoice
{
public:
    constexpr ElementChoice() = default;

    static constexpr ElementChoice off() { return ElementChoice{}; }
    /// Throws std::invalid_argument when `phase_index` is 0.
    static ElementChoice on(std::size_t phase_index);

    constexpr bool is_on() const { return index_ != 0; }
    constexpr bool is_off() const { return index_ == 0; }

    /// 1-based phase index, or 0 when the element is off.
    constexpr std::size_t code() const { return index_; }

    friend constexpr bool operator==(ElementChoice, ElementChoice) = default;
    friend constexpr auto operator<=>(ElementChoice, ElementChoice) = default;

private:
    explicit constexpr ElementChoice(std::size_t idx) : index_(idx) {}
    std::size_t index_ = 0;
};

using Configuration = std::vector<ElementChoice>;

/**
 * Direct-path coefficient plus the concatenated coefficient of every
 * element (transmitter-to-element times element-to-receiver).
 *
 * Elements with zero amplitude carry no information and have no defined
 * argument, so they are dropped at construction; their input positions are
 * kept in dropped_indices().
 */
class ChannelRealization
{
public:
    ChannelRealization() = default;
    ChannelRealization(ComplexVec h_d, std::vector<ComplexVec> v);

    const ComplexVec &direct() const { return h_d_; }
    const std::vector<ComplexVec> &elements() const { return v_; }
    const ComplexVec &element(std::size_t n) const { return v_.at(n); }
    std::size_t size() const { return v_.size(); }

    const std::vector<std::size_t> &dropped_indices() const { return dropped_; }

private:
    ComplexVec h_d_{};
    std::vector<ComplexVec> v_;
    std::vector<std::size_t> dropped_;
};

/// Candidate contribution of an element: v_n rotated by phase `i` (1-based).
ComplexVec f_vector(const ComplexVec &v_n, const PhaseShiftSet &set, std::size_t i);

/// Contribution g_n of an element under `choice`: zero when off.
ComplexVec realize_g(const ComplexVec &v_n, const PhaseShiftSet &set, ElementChoice choice);

/// h = h_d + sum of realized contributions. Throws std::invalid_argument on
/// a configuration length mismatch.
ComplexVec overall_h(const ChannelRealization &real, const PhaseShiftSet &set,
                     std::span<const ElementChoice> cfg);

/// The generator used for every random draw in the library.
using Rng = std::mt19937_64;

/// Derives the seed of an independent stream from (master seed, stream index).
/// Stable across platforms; used to give every trial its own generator.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream);

/// Uniform draw in [0, 2pi) built from the top 53 bits of one generator
/// output, so the sequence is identical on every standard library.
double uniform_angle(Rng &rng);

/**
 * Samples one realization: every element has amplitude
 * 10^((gain_tx_ris_db + gain_ris_rx_db)/20) and an i.i.d. uniform argument;
 * the direct path has amplitude 10^(gain_direct_db/20) and argument 0.
 * Drawing n elements consumes the first n outputs of the seeded generator,
 * so a realization of n elements is a prefix of one with more elements.
 */
ChannelRealization sample_realization(const LinkBudget &budget, std::size_t n, std::uint64_t rng_seed);

} // namespace risdps

#endif // RISDPS_CHANNEL_HPP_
