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

#include "risdps/experiment.hpp"

#include "risdps/metrics.hpp"
#include "risdps/serialization.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace risdps
{

namespace
{

constexpr Solver kSolverOrder[] = {Solver::kSweep, Solver::kCpp, Solver::kCppAlwaysOn, Solver::kExhaustive,
                                   Solver::kContinuousUb};

const char *family_name(PhaseSpec::Family f)
{
    switch (f)
    {
    case PhaseSpec::Family::kExplicit:
        return "explicit";
    case PhaseSpec::Family::kUniform:
        return "uniform";
    case PhaseSpec::Family::kTwoPhaseGap:
        return "two_phase_gap";
    case PhaseSpec::Family::kThreePhaseGaps:
        return "three_phase_gaps";
    }
    return "unknown";
}

PhaseSpec::Family family_from_string(std::string_view s)
{
    for (auto f : {PhaseSpec::Family::kExplicit, PhaseSpec::Family::kUniform, PhaseSpec::Family::kTwoPhaseGap,
                   PhaseSpec::Family::kThreePhaseGaps})
        if (s == family_name(f))
            return f;
    throw std::invalid_argument("unknown phase family '" + std::string(s) + "'");
}

bool is_gap_pair_valid(double g1, double g2)
{
    return g1 > 0.0 && g2 > 0.0 && g1 + g2 < kTwoPi - kAngleEps;
}

PhaseShiftSet resolve_phases(const PhaseSpec &p, double x, std::optional<double> y)
{
    switch (p.family)
    {
    case PhaseSpec::Family::kExplicit:
        return PhaseShiftSet(p.values);
    case PhaseSpec::Family::kUniform:
        return PhaseShiftSet::uniform(p.k);
    case PhaseSpec::Family::kTwoPhaseGap:
        return PhaseShiftSet({0.0, x});
    case PhaseSpec::Family::kThreePhaseGaps:
        return PhaseShiftSet({0.0, x, x + y.value()});
    }
    throw std::logic_error("unhandled phase family");
}

SolverSummary summarize(std::span<const double> xs)
{
    SolverSummary s;
    if (xs.empty())
        return s;
    double sum = 0.0;
    for (double v : xs)
        sum += v;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1)
    {
        double ss = 0.0;
        for (double v : xs)
            ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

// Spectral efficiency per solver plus the empty ratio for one trial.
struct TrialOutcome
{
    std::map<Solver, double> se;
    double empty_ratio = 0.0;
};

TrialOutcome run_trial(const Scenario &s, const AxisPoint &p, std::size_t trial)
{
    const ChannelRealization real =
        sample_realization(p.budget, p.n_elements, derive_stream_seed(s.seed, trial));
    TrialOutcome out;
    auto se_of = [&](const ComplexVec &h) { return capacity(h, p.budget).spectral_efficiency; };

    std::optional<SweepResult> sweep;
    if (s.uses(Solver::kSweep) || s.empty_ratio)
        sweep = sweep_optimize(real, p.phases);
    for (Solver solver : s.solvers)
    {
        switch (solver)
        {
        case Solver::kSweep:
            out.se[solver] = se_of(sweep->h_star);
            break;
        case Solver::kCpp:
            out.se[solver] = se_of(cpp_optimize(real, p.phases).h_star);
            break;
        case Solver::kCppAlwaysOn:
            out.se[solver] = se_of(cpp_optimize(real, p.phases, CppMode::kAlwaysOn).h_star);
            break;
        case Solver::kExhaustive:
            if (p.run_exhaustive)
                out.se[solver] = se_of(exhaustive_optimize(real, p.phases, s.exhaustive_cap).h_star);
            break;
        case Solver::kContinuousUb:
            out.se[solver] = se_of({continuous_upper_bound(real), 0.0});
            break;
        }
    }
    if (s.empty_ratio && p.n_elements > 0 && sweep->amplitude() > 0.0)
    {
        const auto regions = empty_regions(real, p.phases, sweep->amplitude());
        out.empty_ratio = measured_empty_ratio(regions).measured_ratio;
    }
    return out;
}

std::string format_double(double v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(12) << v;
    return os.str();
}

} // namespace

const char *to_string(Solver s)
{
    switch (s)
    {
    case Solver::kSweep:
        return "sweep";
    case Solver::kCpp:
        return "cpp";
    case Solver::kCppAlwaysOn:
        return "cpp_always_on";
    case Solver::kExhaustive:
        return "exhaustive";
    case Solver::kContinuousUb:
        return "continuous_ub";
    }
    return "unknown";
}

Solver solver_from_string(std::string_view name)
{
    for (Solver s : kSolverOrder)
        if (name == to_string(s))
            return s;
    throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

const char *to_string(SweepAxis a)
{
    switch (a)
    {
    case SweepAxis::kNone:
        return "none";
    case SweepAxis::kElements:
        return "n_elements";
    case SweepAxis::kDirectGainDb:
        return "gain_direct_db";
    case SweepAxis::kSnrBudgetDb:
        return "snr_budget_db";
    case SweepAxis::kPhaseGap:
        return "phase_gap";
    case SweepAxis::kPhaseGapPair:
        return "phase_gap_pair";
    }
    return "unknown";
}

SweepAxis axis_from_string(std::string_view name)
{
    for (auto a : {SweepAxis::kNone, SweepAxis::kElements, SweepAxis::kDirectGainDb, SweepAxis::kSnrBudgetDb,
                   SweepAxis::kPhaseGap, SweepAxis::kPhaseGapPair})
        if (name == to_string(a))
            return a;
    throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
}

bool Scenario::uses(Solver s) const
{
    return std::find(solvers.begin(), solvers.end(), s) != solvers.end();
}

void Scenario::validate() const
{
    auto fail = [&](const std::string &msg) { throw std::invalid_argument("scenario '" + name + "': " + msg); };
    if (name.empty())
        throw std::invalid_argument("scenario needs a name");
    budget.validate();
    if (trials < 1)
        fail("trials must be >= 1");
    if (solvers.empty() && !empty_ratio && output == OutputKind::kSummary)
        fail("no solver requested");

    const bool gap_axis = axis == SweepAxis::kPhaseGap || axis == SweepAxis::kPhaseGapPair;
    if (axis != SweepAxis::kNone && x_values.empty())
        fail("axis values are empty");
    if (axis == SweepAxis::kPhaseGapPair && y_values.empty())
        fail("phase_gap_pair needs y values");
    if (phases.family == PhaseSpec::Family::kTwoPhaseGap && axis != SweepAxis::kPhaseGap)
        fail("two_phase_gap phases need the phase_gap axis");
    if (phases.family == PhaseSpec::Family::kThreePhaseGaps && axis != SweepAxis::kPhaseGapPair)
        fail("three_phase_gaps phases need the phase_gap_pair axis");
    if (gap_axis && phases.family != PhaseSpec::Family::kTwoPhaseGap &&
        phases.family != PhaseSpec::Family::kThreePhaseGaps)
        fail("phase gap axes need a gap phase family");
    if (phases.family == PhaseSpec::Family::kExplicit)
        PhaseShiftSet check(phases.values);
    if (phases.family == PhaseSpec::Family::kUniform && phases.k == 0)
        fail("uniform phases need k >= 1");
    if (axis == SweepAxis::kPhaseGap)
        for (double g : x_values)
            if (!(g > 0.0 && g < kTwoPi))
                fail("phase gaps must lie in (0, 2pi)");
    if (axis == SweepAxis::kElements)
        for (double x : x_values)
            if (!(x >= 0.0) || x != std::floor(x))
                fail("element counts must be non-negative integers");
    if (output == OutputKind::kSummary && (uses(Solver::kCpp) || uses(Solver::kCppAlwaysOn)))
        if (!(budget.direct_amplitude() > 0.0))
            fail("cpp needs a nonzero direct path");

    const auto points = expand_points(*this);
    if (points.empty())
        fail("no valid axis points");
    if (uses(Solver::kExhaustive))
        for (const auto &p : points)
            if (p.run_exhaustive && exhaustive_space_size(p.phases.size(), p.n_elements) > exhaustive_cap)
                fail("exhaustive cap exceeded at N=" + std::to_string(p.n_elements));
}

std::vector<AxisPoint> expand_points(const Scenario &s)
{
    std::vector<AxisPoint> out;
    auto make = [&](double x, std::optional<double> y) {
        AxisPoint p;
        p.x = x;
        p.y = y;
        p.n_elements = s.n_elements;
        p.budget = s.budget;
        switch (s.axis)
        {
        case SweepAxis::kElements:
            p.n_elements = static_cast<std::size_t>(x);
            break;
        case SweepAxis::kDirectGainDb:
            p.budget.gain_direct_db = x;
            break;
        case SweepAxis::kSnrBudgetDb:
            p.budget.snr_budget_db = x;
            break;
        default:
            break;
        }
        p.phases = resolve_phases(s.phases, x, y);
        p.run_exhaustive = s.uses(Solver::kExhaustive) &&
                           (!s.exhaustive_max_elements || p.n_elements <= *s.exhaustive_max_elements);
        out.push_back(std::move(p));
    };

    switch (s.axis)
    {
    case SweepAxis::kNone:
        make(0.0, std::nullopt);
        break;
    case SweepAxis::kPhaseGapPair:
        for (double x : s.x_values)
            for (double y : s.y_values)
                if (is_gap_pair_valid(x, y))
                    make(x, y);
        break;
    default:
        for (double x : s.x_values)
            make(x, std::nullopt);
        break;
    }
    return out;
}

std::vector<ResultRow> run_scenario(const Scenario &s, const RunOptions &opts)
{
    s.validate();
    const auto points = expand_points(s);
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, s.trials));

    std::vector<ResultRow> rows;
    rows.reserve(points.size());
    std::vector<TrialOutcome> outcomes(s.trials);
    for (const auto &p : points)
    {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t t = next++; t < s.trials; t = next++)
                outcomes[t] = run_trial(s, p, t);
        };
        if (threads <= 1)
        {
            worker();
        }
        else
        {
            std::vector<std::jthread> pool;
            pool.reserve(threads);
            for (unsigned i = 0; i < threads; ++i)
                pool.emplace_back(worker);
        }

        ResultRow row;
        row.x = p.x;
        row.y = p.y;
        for (Solver solver : kSolverOrder)
        {
            if (!s.uses(solver) || (solver == Solver::kExhaustive && !p.run_exhaustive))
                continue;
            std::vector<double> xs;
            xs.reserve(s.trials);
            for (const auto &o : outcomes)
                xs.push_back(o.se.at(solver));
            row.spectral_efficiency[solver] = summarize(xs);
        }
        if (s.uses(Solver::kSweep) && s.uses(Solver::kCpp))
        {
            const double cpp = row.spectral_efficiency.at(Solver::kCpp).mean;
            if (cpp > 0.0)
                row.gain_pct = performance_gain(row.spectral_efficiency.at(Solver::kSweep).mean, cpp);
        }
        if (s.empty_ratio)
        {
            std::vector<double> xs;
            xs.reserve(s.trials);
            for (const auto &o : outcomes)
                xs.push_back(o.empty_ratio);
            row.empty_ratio = summarize(xs).mean;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RealizationAnalysis run_region_dump(const Scenario &s)
{
    s.validate();
    const AxisPoint p = expand_points(s).front();
    const ChannelRealization real = sample_realization(p.budget, p.n_elements, derive_stream_seed(s.seed, 0));
    return analyze_realization(real, p.phases);
}

std::vector<Scenario> builtin_scenarios()
{
    const PhaseSpec sixths{PhaseSpec::Family::kExplicit, {kPi / 6.0, 5.0 * kPi / 6.0}, 0};
    std::vector<Scenario> out;

    {
        Scenario s;
        s.name = "fig9";
        s.phases = sixths;
        s.axis = SweepAxis::kElements;
        s.x_values = {1, 2, 3, 4, 5, 6, 7, 8, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
        s.solvers = {Solver::kSweep, Solver::kCpp, Solver::kExhaustive};
        s.exhaustive_max_elements = 8;
        out.push_back(s);
    }
    {
        Scenario s;
        s.name = "fig10";
        s.phases = sixths;
        s.axis = SweepAxis::kDirectGainDb;
        for (double db = -140.0; db <= -100.0; db += 5.0)
            s.x_values.push_back(db);
        out.push_back(s);
    }
    {
        Scenario s;
        s.name = "fig11";
        s.phases = sixths;
        s.axis = SweepAxis::kSnrBudgetDb;
        for (double db = 100.0; db <= 130.0; db += 2.0)
            s.x_values.push_back(db);
        out.push_back(s);
    }
    {
        Scenario s;
        s.name = "fig12";
        s.phases.family = PhaseSpec::Family::kTwoPhaseGap;
        s.axis = SweepAxis::kPhaseGap;
        for (int k = 1; k < 24; ++k)
            s.x_values.push_back(k * kPi / 12.0);
        out.push_back(s);
    }
    {
        Scenario s;
        s.name = "fig13";
        s.phases.family = PhaseSpec::Family::kThreePhaseGaps;
        s.axis = SweepAxis::kPhaseGapPair;
        for (int k = 1; k < 18; ++k)
            s.x_values.push_back(k * kPi / 9.0);
        s.y_values = s.x_values;
        out.push_back(s);
    }
    {
        Scenario s;
        s.name = "fig14";
        s.phases = sixths;
        s.trials = 1;
        s.solvers = {Solver::kSweep};
        s.output = OutputKind::kRegions;
        out.push_back(s);
    }
    for (std::size_t k : {2, 3})
    {
        Scenario s;
        s.name = "fig15_k" + std::to_string(k);
        s.phases = {PhaseSpec::Family::kUniform, {}, k};
        s.axis = SweepAxis::kElements;
        s.x_values = {10, 20, 50, 100, 150, 200};
        s.solvers = {Solver::kSweep};
        s.empty_ratio = true;
        out.push_back(s);
    }
    return out;
}

std::vector<Scenario> find_presets(std::string_view name)
{
    std::vector<Scenario> out;
    const std::string prefix = std::string(name) + "_";
    for (auto &s : builtin_scenarios())
        if (s.name == name || s.name.starts_with(prefix))
            out.push_back(std::move(s));
    return out;
}

nlohmann::json scenario_to_json(const Scenario &s)
{
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = s.name;
    j["budget"] = {{"gain_tx_ris_db", s.budget.gain_tx_ris_db},
                   {"gain_ris_rx_db", s.budget.gain_ris_rx_db},
                   {"gain_direct_db", s.budget.gain_direct_db},
                   {"snr_budget_db", s.budget.snr_budget_db},
                   {"bandwidth_hz", s.budget.bandwidth_hz}};
    j["n_elements"] = s.n_elements;
    nlohmann::json ph{{"family", family_name(s.phases.family)}};
    if (s.phases.family == PhaseSpec::Family::kExplicit)
        ph["values"] = s.phases.values;
    if (s.phases.family == PhaseSpec::Family::kUniform)
        ph["k"] = s.phases.k;
    j["phases"] = ph;
    nlohmann::json axis{{"kind", to_string(s.axis)}};
    if (s.axis != SweepAxis::kNone)
        axis["values"] = s.x_values;
    if (s.axis == SweepAxis::kPhaseGapPair)
        axis["values_2"] = s.y_values;
    j["axis"] = axis;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    std::vector<std::string> solvers;
    for (Solver v : s.solvers)
        solvers.emplace_back(to_string(v));
    j["solvers"] = solvers;
    j["empty_ratio"] = s.empty_ratio;
    if (s.exhaustive_max_elements)
        j["exhaustive_max_elements"] = *s.exhaustive_max_elements;
    j["exhaustive_cap"] = s.exhaustive_cap;
    j["output"] = s.output == OutputKind::kSummary ? "summary" : "regions";
    return j;
}

Scenario scenario_from_json(const nlohmann::json &j)
{
    try
    {
        const int version = j.value("schema_version", kSchemaVersion);
        if (version != kSchemaVersion)
            throw std::invalid_argument("unsupported scenario schema_version " + std::to_string(version));
        Scenario s;
        s.name = j.at("name").get<std::string>();
        if (j.contains("budget"))
        {
            const auto &b = j.at("budget");
            s.budget.gain_tx_ris_db = b.value("gain_tx_ris_db", s.budget.gain_tx_ris_db);
            s.budget.gain_ris_rx_db = b.value("gain_ris_rx_db", s.budget.gain_ris_rx_db);
            s.budget.gain_direct_db = b.value("gain_direct_db", s.budget.gain_direct_db);
            s.budget.snr_budget_db = b.value("snr_budget_db", s.budget.snr_budget_db);
            s.budget.bandwidth_hz = b.value("bandwidth_hz", s.budget.bandwidth_hz);
        }
        s.n_elements = j.value("n_elements", s.n_elements);
        const auto &ph = j.at("phases");
        s.phases.family = family_from_string(ph.at("family").get<std::string>());
        if (s.phases.family == PhaseSpec::Family::kExplicit)
            s.phases.values = ph.at("values").get<std::vector<double>>();
        if (s.phases.family == PhaseSpec::Family::kUniform)
            s.phases.k = ph.at("k").get<std::size_t>();
        if (j.contains("axis"))
        {
            const auto &a = j.at("axis");
            s.axis = axis_from_string(a.at("kind").get<std::string>());
            s.x_values = a.value("values", std::vector<double>{});
            s.y_values = a.value("values_2", std::vector<double>{});
        }
        s.trials = j.value("trials", s.trials);
        s.seed = j.value("seed", s.seed);
        if (j.contains("solvers"))
        {
            s.solvers.clear();
            for (const auto &name : j.at("solvers"))
                s.solvers.push_back(solver_from_string(name.get<std::string>()));
        }
        s.empty_ratio = j.value("empty_ratio", s.empty_ratio);
        if (j.contains("exhaustive_max_elements"))
            s.exhaustive_max_elements = j.at("exhaustive_max_elements").get<std::size_t>();
        s.exhaustive_cap = j.value("exhaustive_cap", s.exhaustive_cap);
        const std::string output = j.value("output", std::string("summary"));
        if (output == "summary")
            s.output = OutputKind::kSummary;
        else if (output == "regions")
            s.output = OutputKind::kRegions;
        else
            throw std::invalid_argument("unknown output kind '" + output + "'");
        return s;
    }
    catch (const nlohmann::json::exception &e)
    {
        throw std::invalid_argument(std::string("malformed scenario: ") + e.what());
    }
}

void write_results_csv(std::ostream &os, const Scenario &s, std::span<const ResultRow> rows)
{
    const bool has_y = s.axis == SweepAxis::kPhaseGapPair;
    const bool has_gain = s.uses(Solver::kSweep) && s.uses(Solver::kCpp);

    os << "x";
    if (has_y)
        os << ",y";
    for (Solver solver : kSolverOrder)
        if (s.uses(solver))
            os << ",mean_se_" << to_string(solver) << ",std_se_" << to_string(solver);
    if (has_gain)
        os << ",gain_pct";
    if (s.empty_ratio)
        os << ",empty_ratio";
    os << '\n';

    for (const auto &r : rows)
    {
        os << format_double(r.x);
        if (has_y)
            os << ',' << (r.y ? format_double(*r.y) : "");
        for (Solver solver : kSolverOrder)
        {
            if (!s.uses(solver))
                continue;
            const auto it = r.spectral_efficiency.find(solver);
            if (it == r.spectral_efficiency.end())
                os << ",,";
            else
                os << ',' << format_double(it->second.mean) << ',' << format_double(it->second.stddev);
        }
        if (has_gain)
            os << ',' << (r.gain_pct ? format_double(*r.gain_pct) : "");
        if (s.empty_ratio)
            os << ',' << (r.empty_ratio ? format_double(*r.empty_ratio) : "");
        os << '\n';
    }
}

} // namespace risdps
