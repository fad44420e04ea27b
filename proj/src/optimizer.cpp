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

#include "risdps/optimizer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace risdps
{

namespace
{

struct BestPhase
{
    std::size_t index;
    double angle;
};

BestPhase best_phase(double v_arg, const PhaseShiftSet &set, double theta)
{
    BestPhase best{1, angle_between_args(v_arg + set.phase(1), theta)};
    for (std::size_t i = 2; i <= set.size(); ++i)
    {
        const double a = angle_between_args(v_arg + set.phase(i), theta);
        if (a < best.angle - kAngleEps)
            best = {i, a};
    }
    return best;
}

} // namespace

ElementChoice choose_for_direction(const ComplexVec &v_n, const PhaseShiftSet &set, double theta)
{
    const BestPhase b = best_phase(arg_mod_2pi(v_n), set, wrap_2pi(theta));
    if (b.angle > kHalfPi + kAngleEps)
        return ElementChoice::off();
    return ElementChoice::on(b.index);
}

Configuration config_given_direction(const ChannelRealization &real, const PhaseShiftSet &set, double theta)
{
    Configuration cfg;
    cfg.reserve(real.size());
    for (const auto &v : real.elements())
        cfg.push_back(choose_for_direction(v, set, theta));
    return cfg;
}

ComplexVec update_h(const ComplexVec &h_prev, const SeparationLine &line, const ChannelRealization &real,
                    const PhaseShiftSet &set)
{
    const ComplexVec &v = real.element(line.element);
    return h_prev - realize_g(v, set, line.starting) + realize_g(v, set, line.ending);
}

double continuous_upper_bound(const ChannelRealization &real)
{
    double total = real.direct().amplitude();
    for (const auto &v : real.elements())
        total += v.amplitude();
    return total;
}

SweepResult sweep_optimize(const ChannelRealization &real, const PhaseShiftSet &set, const SweepOptions &options,
                           SweepStats *stats)
{
    SweepStats local;
    SweepStats &st = stats ? *stats : local;
    st = {};

    const std::size_t n = real.size();
    if (n == 0)
    {
        st.initial_h = st.final_h = real.direct();
        return {{}, real.direct(), std::size_t{0}, {}};
    }

    // Element order by argument; ties keep input order.
    std::vector<double> args(n);
    for (std::size_t i = 0; i < n; ++i)
        args[i] = arg_mod_2pi(real.element(i));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return args[a] < args[b]; });

    std::vector<ComplexVec> sorted_v(n);
    for (std::size_t i = 0; i < n; ++i)
        sorted_v[i] = real.element(perm[i]);
    const ChannelRealization sorted(real.direct(), std::move(sorted_v));

    const LineMatrix matrix = separation_lines(sorted, set);
    SortStats sort_stats;
    const std::vector<SeparationLine> order = sort_separation_lines(matrix, &sort_stats);
    st.heap_comparisons = sort_stats.heap_comparisons;
    st.lines = order.size();

    // Configuration of the wrap sector: each element holds the starting
    // choice of its first line met counterclockwise from angle 0.
    Configuration first(n);
    std::vector<bool> seen(n, false);
    std::size_t assigned = 0;
    for (const auto &line : order)
    {
        if (!seen[line.element])
        {
            seen[line.element] = true;
            first[line.element] = line.starting;
            if (++assigned == n)
                break;
        }
    }

    ComplexVec h = sorted.direct();
    for (std::size_t i = 0; i < n; ++i)
        h += realize_g(sorted.element(i), set, first[i]);
    st.vector_additions += n;
    st.initial_h = h;

    const double scale = continuous_upper_bound(sorted);
    const std::size_t verify_every = (n + 3) / 4;
    Configuration running;
    if (options.verify)
        running = first;

    SweepResult result;
    if (options.record_candidates)
        result.candidates.assign(order.size(), std::numeric_limits<double>::quiet_NaN());

    double best = h.norm();
    std::size_t best_sector = 0;
    st.candidates = 1;
    if (options.record_candidates)
        result.candidates[0] = h.amplitude();

    for (std::size_t j = 0; j < order.size(); ++j)
    {
        const SeparationLine &line = order[j];
        h = update_h(h, line, sorted, set);
        st.vector_additions += 2;

        if (options.verify)
        {
            if (running[line.element] != line.starting)
                throw std::logic_error("sweep crossed a line whose starting choice is not active");
            running[line.element] = line.ending;
            if ((j + 1) % verify_every == 0)
            {
                const ComplexVec full = overall_h(sorted, set, running);
                if ((full - h).amplitude() > 1e-9 * scale)
                    throw std::logic_error("incremental h drifted after " + std::to_string(j + 1) + " crossings");
            }
        }

        const std::size_t sector = j + 1;
        if (sector == order.size())
            break;
        if (!(order[sector].argument > line.argument))
            continue; // zero-width sector
        ++st.candidates;
        const double cand = h.norm();
        if (options.record_candidates)
            result.candidates[sector] = std::sqrt(cand);
        if (cand > best)
        {
            best = cand;
            best_sector = sector;
        }
    }
    st.final_h = h;

    // Replay the transitions up to the winning sector.
    Configuration cfg = first;
    for (std::size_t j = 0; j < best_sector; ++j)
        cfg[order[j].element] = order[j].ending;

    result.config.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        result.config[perm[i]] = cfg[i];
    result.h_star = overall_h(real, set, result.config);
    result.sector_index = best_sector;
    return result;
}

std::uint64_t exhaustive_space_size(std::size_t k, std::size_t n)
{
    const std::uint64_t base = static_cast<std::uint64_t>(k) + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (total > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        total *= base;
    }
    return total;
}

SweepResult exhaustive_optimize(const ChannelRealization &real, const PhaseShiftSet &set, std::uint64_t cap)
{
    const std::size_t n = real.size();
    const std::size_t k = set.size();
    const std::uint64_t space = exhaustive_space_size(k, n);
    if (space > cap)
        throw std::length_error("exhaustive search space (K+1)^N = " + std::to_string(space) + " exceeds cap " +
                                std::to_string(cap));

    // Candidate table: row n holds {0, F_{n,1}, ..., F_{n,K}}.
    std::vector<ComplexVec> table(n * (k + 1));
    for (std::size_t e = 0; e < n; ++e)
        for (std::size_t i = 1; i <= k; ++i)
            table[e * (k + 1) + i] = f_vector(real.element(e), set, i);

    std::vector<std::size_t> code(n, 0);
    std::vector<std::size_t> best_code = code;
    double best = -1.0;
    while (true)
    {
        ComplexVec h = real.direct();
        for (std::size_t e = 0; e < n; ++e)
            h += table[e * (k + 1) + code[e]];
        const double val = h.norm();
        if (val > best)
        {
            best = val;
            best_code = code;
        }
        // odometer, last element fastest: lexicographic order
        std::size_t pos = n;
        while (pos > 0 && code[pos - 1] == k)
            code[--pos] = 0;
        if (pos == 0)
            break;
        ++code[pos - 1];
    }

    SweepResult result;
    result.config.reserve(n);
    for (std::size_t c : best_code)
        result.config.push_back(c == 0 ? ElementChoice::off() : ElementChoice::on(c));
    result.h_star = overall_h(real, set, result.config);
    return result;
}

SweepResult cpp_optimize(const ChannelRealization &real, const PhaseShiftSet &set, CppMode mode)
{
    const ComplexVec &hd = real.direct();
    if (hd.re == 0.0 && hd.im == 0.0)
        throw std::domain_error("closest point projection needs a nonzero direct path; use sweep_optimize");
    const double target = arg_mod_2pi(hd);

    SweepResult result;
    result.config.reserve(real.size());
    for (const auto &v : real.elements())
    {
        if (mode == CppMode::kOffEnabled)
            result.config.push_back(choose_for_direction(v, set, target));
        else
            result.config.push_back(ElementChoice::on(best_phase(arg_mod_2pi(v), set, target).index));
    }
    result.h_star = overall_h(real, set, result.config);
    return result;
}

} // namespace risdps
