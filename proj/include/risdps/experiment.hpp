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

#ifndef RISDPS_EXPERIMENT_HPP_
#define RISDPS_EXPERIMENT_HPP_

#include "risdps/analysis.hpp"
#include "risdps/channel.hpp"
#include "risdps/optimizer.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace risdps
{

enum class Solver
{
    kSweep,
    kCpp,
    kCppAlwaysOn,
    kExhaustive,
    kContinuousUb,
};

const char *to_string(Solver s);
/// Throws std::invalid_argument for unknown names.
Solver solver_from_string(std::string_view name);

/// Quantity varied along the x axis of an experiment.
enum class SweepAxis
{
    kNone,
    kElements,       // N
    kDirectGainDb,   // |h_d| in dB
    kSnrBudgetDb,    // P / (B N0) in dB
    kPhaseGap,       // two phases {0, gap}
    kPhaseGapPair,   // three phases {0, gap1, gap1 + gap2}; x = gap1, y = gap2
};

const char *to_string(SweepAxis a);
SweepAxis axis_from_string(std::string_view name);

struct PhaseSpec
{
    enum class Family
    {
        kExplicit,
        kUniform,
        kTwoPhaseGap,
        kThreePhaseGaps,
    };

    Family family = Family::kExplicit;
    std::vector<double> values; // kExplicit
    std::size_t k = 0;          // kUniform
};

enum class OutputKind
{
    kSummary, // one row of solver statistics per axis point
    kRegions, // empty regions of a single realization
};

struct Scenario
{
    std::string name;
    LinkBudget budget;
    std::size_t n_elements = 50;
    PhaseSpec phases;
    SweepAxis axis = SweepAxis::kNone;
    std::vector<double> x_values;
    std::vector<double> y_values; // kPhaseGapPair only
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::vector<Solver> solvers{Solver::kSweep, Solver::kCpp};
    bool empty_ratio = false;
    /// Exhaustive search is skipped (blank cells) above this many elements.
    std::optional<std::size_t> exhaustive_max_elements;
    std::uint64_t exhaustive_cap = kDefaultExhaustiveCap;
    OutputKind output = OutputKind::kSummary;

    bool uses(Solver s) const;

    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

/// One concrete x-axis point after applying the axis value to the scenario.
struct AxisPoint
{
    double x = 0.0;
    std::optional<double> y;
    std::size_t n_elements = 0;
    LinkBudget budget;
    PhaseShiftSet phases{std::vector<double>{0.0}};
    bool run_exhaustive = false;
};

/// Points in output order. Gap pairs whose sum reaches 2pi are skipped.
std::vector<AxisPoint> expand_points(const Scenario &s);

struct SolverSummary
{
    double mean = 0.0;
    double stddev = 0.0;
};

struct ResultRow
{
    double x = 0.0;
    std::optional<double> y;
    std::map<Solver, SolverSummary> spectral_efficiency;
    std::optional<double> gain_pct;
    std::optional<double> empty_ratio;
};

struct RunOptions
{
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Runs every axis point. Trial t of every point uses the realization drawn
/// from derive_stream_seed(seed, t), and aggregation is in trial order, so
/// the output does not depend on the thread count.
std::vector<ResultRow> run_scenario(const Scenario &s, const RunOptions &opts = {});

/// Empty regions of the single realization drawn for trial 0 at the first
/// axis point, with |h*| from the sweep.
RealizationAnalysis run_region_dump(const Scenario &s);

/// Desk-scale presets fig9 ... fig15 (fig15 comes as fig15_k2 and fig15_k3).
std::vector<Scenario> builtin_scenarios();

/// Presets named `name` or `name_*`; empty when none match.
std::vector<Scenario> find_presets(std::string_view name);

nlohmann::json scenario_to_json(const Scenario &s);
Scenario scenario_from_json(const nlohmann::json &j);

void write_results_csv(std::ostream &os, const Scenario &s, std::span<const ResultRow> rows);

} // namespace risdps

#endif // RISDPS_EXPERIMENT_HPP_
