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

#ifndef RISDPS_ANALYSIS_HPP_
#define RISDPS_ANALYSIS_HPP_

#include "risdps/channel.hpp"
#include "risdps/optimizer.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace risdps
{

/// Arc of the unit circle given by its center direction and half-width.
struct CircularArc
{
    double center = 0.0;
    double half_width = 0.0;

    double begin() const { return wrap_2pi(center - half_width); }
    double width() const { return 2.0 * half_width; }

    /// True when `angle` lies strictly inside the arc after shrinking it by
    /// `shrink` radians on both sides.
    bool contains(double angle, double shrink = 0.0) const;
};

/// Neighbourhood of a separation line in which the optimal overall channel
/// cannot point.
struct EmptyRegion
{
    SeparationLine line;
    double half_width = 0.0; // [0, pi/2]
    CircularArc interval;
};

struct EmptyRatioReport
{
    double measured_ratio = 0.0; // union length / 2pi
    double sum_ratio_ub = 0.0;   // summed widths / 2pi
    double overlap_fraction = 0.0;
};

/// Half-width around a line between two ON choices whose phases are
/// `phi_i` and `phi_next`: arcsin(|v| |sin((phi_next - phi_i)/2)| / |h*|).
/// The arcsin argument is clamped to 1. Throws std::domain_error if h_amp <= 0.
double omega_small_gap(double v_amp, double phi_i, double phi_next, double h_amp);

/// Half-width around either line bounding an OFF sector:
/// arcsin(|v| / (2 |h*|)), clamped the same way.
double omega_large_gap(double v_amp, double h_amp);

/// One region per separation line of every element.
std::vector<EmptyRegion> empty_regions(const ChannelRealization &real, const PhaseShiftSet &set,
                                       double h_star_amp);

/// Total length of the union of arcs on the circle, in [0, 2pi].
double arc_union_length(std::span<const CircularArc> arcs);

EmptyRatioReport measured_empty_ratio(std::span<const EmptyRegion> regions);

/// K sin(pi/K) / pi, the large-N approximation of the summed-width ratio.
double empty_ratio_upper_bound_approx(std::size_t k);

enum class HStarSource
{
    kSweepOptimum,
    kContinuousBound,
};

struct RealizationAnalysis
{
    SweepResult sweep;
    double h_star_amp = 0.0;
    std::vector<EmptyRegion> regions;
    EmptyRatioReport report;
};

/// Runs the sweep, builds the empty regions with the chosen |h*| and
/// measures their coverage.
RealizationAnalysis analyze_realization(const ChannelRealization &real, const PhaseShiftSet &set,
                                        HStarSource source = HStarSource::kSweepOptimum);

/// CSV with header center_rad,half_width_rad,element,kind.
void write_regions_csv(std::ostream &os, std::span<const EmptyRegion> regions);

} // namespace risdps

#endif // RISDPS_ANALYSIS_HPP_
