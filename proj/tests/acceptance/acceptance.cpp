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

// Acceptance checks. Each criterion prints one PASS/FAIL line; the exit
// status is nonzero when any of them fails.

#include "risdps/analysis.hpp"
#include "risdps/experiment.hpp"
#include "risdps/metrics.hpp"
#include "risdps/optimizer.hpp"

#include "generators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace risdps;

namespace
{

struct Outcome
{
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const PhaseShiftSet kSixths({kPi / 6.0, 5.0 * kPi / 6.0});

Outcome oracle_equivalence()
{
    const auto t0 = Clock::now();
    gen::Gen g(1001);
    const int instances = 600;
    double worst = 0.0;
    for (int t = 0; t < instances; ++t)
    {
        const std::size_t n = g.index(1, 8);
        const std::size_t k = g.index(1, 3);
        const auto set = g.phase_set(k);
        const auto real = g.realization(n, g.uniform(0.0, 3.0));
        const double a = sweep_optimize(real, set).amplitude();
        const double b = exhaustive_optimize(real, set).amplitude();
        worst = std::max(worst, std::abs(a - b) / std::max(b, 1e-300));
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-12 && secs < 60.0,
            fmt("%d instances, max relative |h| difference %.3g, %.2f s", instances, worst, secs)};
}

// Best |h| over amplitudes {0, 0.05, ..., 1}^N and every phase assignment.
double dense_grid_optimum(const ChannelRealization &real, const PhaseShiftSet &set)
{
    const std::size_t n = real.size();
    const std::size_t k = set.size();
    std::vector<double> levels(21);
    for (int i = 0; i <= 20; ++i)
        levels[i] = 0.05 * i;

    std::vector<std::size_t> phase(n, 1);
    std::vector<ComplexVec> f(n);
    double best = 0.0;
    std::function<void(std::size_t, ComplexVec)> amp = [&](std::size_t e, ComplexVec h) {
        if (e == n)
        {
            best = std::max(best, h.norm());
            return;
        }
        for (double beta : levels)
            amp(e + 1, h + beta * f[e]);
    };
    while (true)
    {
        for (std::size_t e = 0; e < n; ++e)
            f[e] = f_vector(real.element(e), set, phase[e]);
        amp(0, real.direct());
        std::size_t pos = n;
        while (pos > 0 && phase[pos - 1] == k)
            phase[--pos] = 1;
        if (pos == 0)
            break;
        ++phase[pos - 1];
    }
    return std::sqrt(best);
}

Outcome binary_amplitude_suffices()
{
    gen::Gen g(1002);
    const int instances = 120;
    double worst = -1.0;
    for (int t = 0; t < instances; ++t)
    {
        const std::size_t n = g.index(1, 5);
        const std::size_t k = g.index(1, n == 5 ? 2 : 3);
        const auto set = g.phase_set(k);
        const auto real = g.realization(n, g.uniform(0.0, 2.0));
        const double binary = exhaustive_optimize(real, set).amplitude();
        const double dense = dense_grid_optimum(real, set);
        worst = std::max(worst, (dense - binary) / binary);
    }
    return {worst <= 1e-12,
            fmt("%d instances, max relative excess of the amplitude grid %.3g", instances, worst)};
}

Outcome empty_ratio_limits()
{
    const auto t0 = Clock::now();
    double measured[2] = {0.0, 0.0};
    for (int i = 0; i < 2; ++i)
    {
        Scenario s = find_presets(i == 0 ? "fig15_k2" : "fig15_k3").front();
        s.x_values = {200};
        s.trials = 1000;
        measured[i] = *run_scenario(s).front().empty_ratio;
    }
    const double ub2 = empty_ratio_upper_bound_approx(2);
    const double ub3 = empty_ratio_upper_bound_approx(3);
    const double secs = seconds_since(t0);
    const bool pass = std::abs(measured[0] - 0.60) <= 0.02 && std::abs(measured[1] - 0.62) <= 0.02 &&
                      std::abs(ub2 - 2.0 / kPi) <= 1e-15 && std::abs(ub3 - 3.0 * std::sqrt(3.0) / (2.0 * kPi)) <= 1e-15 &&
                      fmt("%.4f", ub2) == "0.6366" && fmt("%.4f", ub3) == "0.8270" && secs < 300.0;
    return {pass, fmt("N=200, 1000 trials: K=2 %.4f, K=3 %.4f; bound K=2 %.4f, K=3 %.4f; %.1f s", measured[0],
                      measured[1], ub2, ub3, secs)};
}

Outcome exclusion_property()
{
    const LinkBudget budget;
    int violations = 0;
    const int realizations = 200;
    for (int t = 0; t < realizations; ++t)
    {
        const auto real = sample_realization(budget, 50, derive_stream_seed(2024, t));
        const auto a = analyze_realization(real, kSixths);
        const double arg = arg_mod_2pi(a.sweep.h_star);
        for (const auto &r : a.regions)
            if (r.interval.contains(arg, 1e-9))
                ++violations;
    }
    return {violations == 0, fmt("%d realizations, %d violations", realizations, violations)};
}

Outcome gain_anchor()
{
    Scenario s = find_presets("fig11").front();
    s.trials = 1000;
    const auto rows = run_scenario(s);
    double at108 = std::nan("");
    double worst_rise = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        if (rows[i].x == 108.0)
            at108 = *rows[i].gain_pct;
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            worst_rise = std::max(worst_rise, *rows[j].gain_pct - *rows[i].gain_pct);
    }
    const bool pass = at108 >= 10.0 && at108 <= 20.0 && worst_rise <= 2.0;
    return {pass, fmt("gain at 108 dB %.2f%% (100 dB %.2f%%, 130 dB %.2f%%), largest rise %.3f points", at108,
                      *rows.front().gain_pct, *rows.back().gain_pct, worst_rise)};
}

Outcome phase_gap_structure()
{
    Scenario two = find_presets("fig12").front();
    two.trials = 1000;
    const auto r2 = run_scenario(two);
    const auto min2 = std::min_element(r2.begin(), r2.end(), [](auto &a, auto &b) { return *a.gain_pct < *b.gain_pct; });
    const double step2 = kPi / 12.0;

    Scenario three = find_presets("fig13").front();
    three.trials = 1000;
    const auto r3 = run_scenario(three);
    const auto min3 = std::min_element(r3.begin(), r3.end(), [](auto &a, auto &b) { return *a.gain_pct < *b.gain_pct; });
    const double step3 = kPi / 9.0;
    const double target = 2.0 * kPi / 3.0;

    const bool pass = std::abs(min2->x - kPi) <= step2 + 1e-12 && std::abs(min3->x - target) <= step3 + 1e-12 &&
                      std::abs(*min3->y - target) <= step3 + 1e-12;
    return {pass, fmt("two phases: minimum %.2f%% at gap %.4f (pi = %.4f); three phases: minimum %.2f%% at "
                      "(%.4f, %.4f), target %.4f",
                      *min2->gain_pct, min2->x, kPi, *min3->gain_pct, min3->x, *min3->y, target)};
}

Outcome uniform_sets_stay_on()
{
    const LinkBudget budget;
    const auto set = PhaseShiftSet::uniform(3);
    std::size_t off = 0;
    const int realizations = 500;
    for (int t = 0; t < realizations; ++t)
    {
        const auto res = sweep_optimize(sample_realization(budget, 50, derive_stream_seed(77, t)), set);
        off += std::count_if(res.config.begin(), res.config.end(), [](auto c) { return c.is_off(); });
    }
    return {off == 0, fmt("%d realizations of 50 elements, %zu OFF elements", realizations, off)};
}

Outcome addition_budget()
{
    gen::Gen g(1008);
    const std::vector<PhaseShiftSet> sets{kSixths, PhaseShiftSet::uniform(3), PhaseShiftSet({0.0, 0.4, 1.1, 3.0}),
                                          PhaseShiftSet::uniform(8)};
    bool pass = true;
    double worst_heap_ratio = 0.0;
    double worst_scaling = 0.0;
    for (const auto &set : sets)
    {
        const std::size_t l = lines_per_element(set);
        const double log_l = std::ceil(std::log2(static_cast<double>(l)));
        std::uint64_t cmp[2] = {0, 0};
        int idx = 0;
        for (std::size_t n : {100u, 1000u})
        {
            SweepStats st;
            sweep_optimize(g.realization(n), set, {}, &st);
            pass = pass && st.vector_additions == n + 2 * n * l;
            const double m = static_cast<double>(n * l);
            worst_heap_ratio = std::max(worst_heap_ratio, st.heap_comparisons / (2.0 * m * log_l + 2.0 * m));
            cmp[idx++] = st.heap_comparisons;
        }
        const double scaling = static_cast<double>(cmp[1]) / static_cast<double>(cmp[0]);
        worst_scaling = std::max(worst_scaling, std::abs(scaling - 10.0));
    }
    pass = pass && worst_heap_ratio <= 1.0 && worst_scaling <= 1.0;
    return {pass, fmt("additions equal N + 2NL on all sets; heap comparisons at most %.2f of 2NL(ceil log2 L + 1), "
                      "N=100 -> 1000 ratio within 10 +- %.2f",
                      worst_heap_ratio, worst_scaling)};
}

Outcome determinism()
{
    std::size_t checked = 0;
    for (auto s : builtin_scenarios())
    {
        s.trials = std::min<std::size_t>(s.trials, 60);
        std::ostringstream a, b;
        if (s.output == OutputKind::kRegions)
        {
            write_regions_csv(a, run_region_dump(s).regions);
            write_regions_csv(b, run_region_dump(s).regions);
        }
        else
        {
            write_results_csv(a, s, run_scenario(s, {1}));
            write_results_csv(b, s, run_scenario(s, {0}));
        }
        if (a.str() != b.str() || a.str().empty())
            return {false, "scenario " + s.name + " differs between runs"};
        ++checked;
    }
    return {true, fmt("%zu presets byte-identical across two runs with different thread counts", checked)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, Outcome (*)()>> criteria{
        {"oracle-equivalence", oracle_equivalence},
        {"binary-amplitude", binary_amplitude_suffices},
        {"empty-ratio-limits", empty_ratio_limits},
        {"exclusion", exclusion_property},
        {"gain-anchor", gain_anchor},
        {"phase-gap-structure", phase_gap_structure},
        {"uniform-set-on", uniform_sets_stay_on},
        {"addition-budget", addition_budget},
        {"determinism", determinism},
    };
    int failures = 0;
    for (const auto &[name, fn] : criteria)
    {
        Outcome o;
        try
        {
            o = fn();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
