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
#include "risdps/experiment.hpp"
#include "risdps/serialization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#ifndef RISDPS_GIT_DESCRIBE
#define RISDPS_GIT_DESCRIBE "unknown"
#endif

namespace fs = std::filesystem;
using namespace risdps;

namespace
{

nlohmann::json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    try
    {
        return nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::vector<Scenario> load_scenarios(const std::string &arg)
{
    if (fs::exists(arg))
        return {scenario_from_json(read_json_file(arg))};
    auto presets = find_presets(arg);
    if (presets.empty())
        throw std::invalid_argument("'" + arg + "' is neither a scenario file nor a preset (see 'ris-dps list')");
    return presets;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

// Realization document plus the phase set from --phases, or from the file.
std::pair<ChannelRealization, PhaseShiftSet> load_instance(const std::string &input, const std::string &phases)
{
    RealizationDocument doc = realization_from_json(read_json_file(input));
    if (!phases.empty())
        return {doc.realization, PhaseShiftSet(parse_phase_list(phases))};
    if (!doc.phases)
        throw std::invalid_argument("no phase set: pass --phases or add \"phases\" to the input");
    return {doc.realization, *doc.phases};
}

struct RunArgs
{
    std::string scenario;
    std::string out = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    bool fast = false;
    unsigned threads = 0;
};

int cmd_run(const RunArgs &a)
{
    auto scenarios = load_scenarios(a.scenario);
    fs::create_directories(a.out);
    for (auto &s : scenarios)
    {
        if (a.seed)
            s.seed = *a.seed;
        if (a.fast)
            s.trials = std::min<std::size_t>(s.trials, 100);
        if (a.trials)
            s.trials = *a.trials;
        s.validate();

        const fs::path csv_path = fs::path(a.out) / (s.name + ".csv");
        std::ofstream csv(csv_path);
        if (!csv)
            throw std::runtime_error("cannot write '" + csv_path.string() + "'");
        if (s.output == OutputKind::kRegions)
        {
            const auto analysis = run_region_dump(s);
            write_regions_csv(csv, analysis.regions);
        }
        else
        {
            const auto rows = run_scenario(s, {a.threads});
            write_results_csv(csv, s, rows);
        }

        nlohmann::json meta;
        meta["scenario"] = scenario_to_json(s);
        meta["seed"] = s.seed;
        meta["git_describe"] = RISDPS_GIT_DESCRIBE;
        meta["timestamp_utc"] = utc_timestamp();
        std::ofstream(fs::path(a.out) / (s.name + ".json")) << meta.dump(2) << '\n';
        std::cerr << "wrote " << csv_path.string() << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Optimal configuration of RIS elements with discrete phase shifts"};
    app.require_subcommand(1);

    RunArgs run;
    auto *run_cmd = app.add_subcommand("run", "Run an experiment scenario and write <name>.csv plus <name>.json");
    run_cmd->add_option("--scenario", run.scenario, "Scenario JSON file or preset name")->required();
    run_cmd->add_option("--out", run.out, "Output directory");
    run_cmd->add_option("--seed", run.seed, "Override the scenario seed");
    run_cmd->add_option("--trials", run.trials, "Override the trial count");
    run_cmd->add_flag("--fast", run.fast, "Cap trials at 100");
    run_cmd->add_option("--threads", run.threads, "Worker threads (0 = all cores)");

    std::string input, phases, solver = "sweep";
    auto *solve_cmd = app.add_subcommand("solve", "Optimize one realization and print the result as JSON");
    solve_cmd->add_option("--input", input, "Realization JSON")->required();
    solve_cmd->add_option("--phases", phases, "Phase list, e.g. \"pi/6,5pi/6\"");
    solve_cmd->add_option("--solver", solver, "sweep | cpp | cpp_always_on | exhaustive");

    auto *regions_cmd = app.add_subcommand("regions", "Print the empty regions of one realization as CSV");
    regions_cmd->add_option("--input", input, "Realization JSON")->required();
    regions_cmd->add_option("--phases", phases, "Phase list");

    std::size_t n_elements = 50;
    std::uint64_t seed = 1;
    auto *sample_cmd = app.add_subcommand("sample", "Draw a realization with the default link budget");
    sample_cmd->add_option("-n,--elements", n_elements, "Number of elements");
    sample_cmd->add_option("--seed", seed, "Generator seed");
    sample_cmd->add_option("--phases", phases, "Phase list to embed");

    auto *list_cmd = app.add_subcommand("list", "List the built-in presets");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*run_cmd)
            return cmd_run(run);
        if (*solve_cmd)
        {
            const auto [real, set] = load_instance(input, phases);
            SweepResult r;
            switch (solver_from_string(solver))
            {
            case Solver::kSweep:
                r = sweep_optimize(real, set);
                break;
            case Solver::kCpp:
                r = cpp_optimize(real, set);
                break;
            case Solver::kCppAlwaysOn:
                r = cpp_optimize(real, set, CppMode::kAlwaysOn);
                break;
            case Solver::kExhaustive:
                r = exhaustive_optimize(real, set);
                break;
            default:
                throw std::invalid_argument("solver '" + solver + "' has no configuration output");
            }
            std::cout << sweep_result_to_json(r).dump(2) << '\n';
            return 0;
        }
        if (*regions_cmd)
        {
            const auto [real, set] = load_instance(input, phases);
            const auto analysis = analyze_realization(real, set);
            write_regions_csv(std::cout, analysis.regions);
            return 0;
        }
        if (*sample_cmd)
        {
            const auto real = sample_realization(LinkBudget{}, n_elements, seed);
            std::optional<PhaseShiftSet> set;
            if (!phases.empty())
                set.emplace(parse_phase_list(phases));
            std::cout << realization_to_json(real, set ? &*set : nullptr).dump(2) << '\n';
            return 0;
        }
        if (*list_cmd)
        {
            for (const auto &s : builtin_scenarios())
                std::cout << s.name << '\t' << to_string(s.axis) << '\t' << s.trials << " trials\n";
            return 0;
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "ris-dps: error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
