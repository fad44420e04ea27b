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

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace risdps
{

bool CircularArc::contains(double angle, double shrink) const
{
    return angle_between_args(angle, center) < half_width - shrink;
}

namespace
{

double clamped_asin(double ratio)
{
    return std::asin(std::clamp(ratio, 0.0, 1.0));
}

void require_positive(double h_amp)
{
    if (!(h_amp > 0.0))
        throw std::domain_error("empty-region width needs |h*| > 0");
}

} // namespace

double omega_small_gap(double v_amp, double phi_i, double phi_next, double h_amp)
{
    require_positive(h_amp);
    return clamped_asin(v_amp * std::fabs(std::sin(0.5 * (phi_next - phi_i))) / h_amp);
}

double omega_large_gap(double v_amp, double h_amp)
{
    require_positive(h_amp);
    return clamped_asin(v_amp / (2.0 * h_amp));
}

std::vector<EmptyRegion> empty_regions(const ChannelRealization &real, const PhaseShiftSet &set,
                                       double h_star_amp)
{
    require_positive(h_star_amp);
    std::vector<EmptyRegion> out;
    if (real.size() == 0)
        return out;
    const LineMatrix m = separation_lines(real, set);
    out.reserve(m.flat().size());
    for (const auto &line : m.flat())
    {
        const double v_amp = real.element(line.element).amplitude();
        double w = 0.0;
        switch (line.kind)
        {
        case LineKind::kBisector:
        case LineKind::kCollapsed: {
            const double lo = set.phase(line.gap_index);
            w = omega_small_gap(v_amp, lo, lo + set.gap(line.gap_index), h_star_amp);
            break;
        }
        case LineKind::kOffEntry:
        case LineKind::kOffExit:
            w = omega_large_gap(v_amp, h_star_amp);
            break;
        }
        out.push_back({line, w, {line.argument, w}});
    }
    return out;
}

double arc_union_length(std::span<const CircularArc> arcs)
{
    std::vector<std::pair<double, double>> pieces;
    pieces.reserve(2 * arcs.size());
    for (const auto &a : arcs)
    {
        const double w = a.width();
        if (w <= 0.0)
            continue;
        if (w >= kTwoPi)
            return kTwoPi;
        const double b = a.begin();
        const double e = b + w;
        if (e > kTwoPi)
        {
            pieces.emplace_back(b, kTwoPi);
            pieces.emplace_back(0.0, e - kTwoPi);
        }
        else
        {
            pieces.emplace_back(b, e);
        }
    }
    if (pieces.empty())
        return 0.0;
    std::sort(pieces.begin(), pieces.end());

    double total = 0.0;
    auto [cur_b, cur_e] = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i)
    {
        const auto [b, e] = pieces[i];
        if (b > cur_e)
        {
            total += cur_e - cur_b;
            cur_b = b;
            cur_e = e;
        }
        else
        {
            cur_e = std::max(cur_e, e);
        }
    }
    total += cur_e - cur_b;
    return std::min(total, kTwoPi);
}

EmptyRatioReport measured_empty_ratio(std::span<const EmptyRegion> regions)
{
    std::vector<CircularArc> arcs;
    arcs.reserve(regions.size());
    double sum = 0.0;
    for (const auto &r : regions)
    {
        arcs.push_back(r.interval);
        sum += 2.0 * r.half_width;
    }
    EmptyRatioReport rep;
    rep.measured_ratio = arc_union_length(arcs) / kTwoPi;
    rep.sum_ratio_ub = sum / kTwoPi;
    rep.overlap_fraction = sum > 0.0 ? 1.0 - rep.measured_ratio / rep.sum_ratio_ub : 0.0;
    return rep;
}

double empty_ratio_upper_bound_approx(std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("K must be at least 1");
    const double kk = static_cast<double>(k);
    return kk * std::sin(kPi / kk) / kPi;
}

RealizationAnalysis analyze_realization(const ChannelRealization &real, const PhaseShiftSet &set,
                                        HStarSource source)
{
    RealizationAnalysis a;
    a.sweep = sweep_optimize(real, set);
    a.h_star_amp = source == HStarSource::kSweepOptimum ? a.sweep.amplitude() : continuous_upper_bound(real);
    a.regions = empty_regions(real, set, a.h_star_amp);
    a.report = measured_empty_ratio(a.regions);
    return a;
}

void write_regions_csv(std::ostream &os, std::span<const EmptyRegion> regions)
{
    const auto old_flags = os.flags();
    const auto old_prec = os.precision();
    os << "center_rad,half_width_rad,element,kind\n";
    os << std::setprecision(17);
    for (const auto &r : regions)
        os << r.interval.center << ',' << r.half_width << ',' << r.line.element << ',' << to_string(r.line.kind)
           << '\n';
    os.flags(old_flags);
    os.precision(old_prec);
}

} // namespace risdps
