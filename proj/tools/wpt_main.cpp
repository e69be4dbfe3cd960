// SPDX-License-Identifier: Apache-2.0
//
// wpt - cell-less RF wireless power transfer simulator
// Copyright (C) 2026 The wpt authors
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

// wpt: command-line front end for the cell-less wireless power transfer simulator.
//
//   wpt run      --scenario F --seed S --mode {cellless|smallcell} [--smallcell-mode ...] --out DIR
//   wpt sweep    --scenario F --powers 10,12,...,20 --antennas 3,5 --trials T --seed S --out DIR
//   wpt compare  --scenario F --powers ... --antennas ... --trials T --seed S --out DIR
//   wpt validate --instances N --seed S [--scenario F] [--inject-fault] [--replay SEED]
//
// Exit codes: 0 success, 1 validation/assertion failure, 2 usage or parse error.

#include "list_parse.hpp"

#include "wpt/errors.hpp"
#include "wpt/scenario.hpp"
#include "wpt/sim.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <iostream>
#include <string>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::ofstream open_output(const fs::path& dir, const std::string& name)
{
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + (dir / name).string());
    return out;
}

struct GridArgs {
    std::string scenario;
    std::string powers = "18";
    std::string antennas;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::string smallcell_mode = "physical";
    std::string out = ".";
};

void add_grid_options(CLI::App* cmd, GridArgs& args)
{
    cmd->add_option("--scenario", args.scenario, "Scenario JSON file")->required();
    cmd->add_option("--powers", args.powers,
                    "AP power budgets in dBm, comma separated ('10,12,...,20' expands)");
    cmd->add_option("--antennas", args.antennas,
                    "Antenna counts per AP, comma separated (default: scenario values)");
    cmd->add_option("--trials", args.trials, "Fading realizations per grid cell");
    cmd->add_option("--seed", args.seed, "Base seed; trial i uses seed + i");
    cmd->add_option("--smallcell-mode", args.smallcell_mode, "physical | own-cell")
        ->check(CLI::IsMember({"physical", "own-cell"}));
    cmd->add_option("--out", args.out, "Output directory");
}

wpt::SweepSpec grid_spec(const GridArgs& args, const wpt::Topology& topo)
{
    wpt::SweepSpec spec;
    spec.power_dbm_values = wpt::tools::parse_number_list(args.powers);
    if (args.antennas.empty()) {
        // Keep the scenario's antenna counts only when they are uniform.
        const int m = topo.aps.front().antenna_count;
        for (const auto& ap : topo.aps) {
            if (ap.antenna_count != m)
                throw wpt::InvalidArgument(
                    "scenario antenna counts differ; pass --antennas explicitly");
        }
        spec.antenna_counts = {m};
    } else {
        for (double v : wpt::tools::parse_number_list(args.antennas)) {
            if (v != static_cast<int>(v))
                throw wpt::InvalidArgument("antenna counts must be integers");
            spec.antenna_counts.push_back(static_cast<int>(v));
        }
    }
    spec.trials = args.trials;
    spec.base_seed = args.seed;
    spec.smallcell_mode = wpt::parse_harvest_mode(args.smallcell_mode);
    return spec;
}

int cmd_run(const std::string& scenario, std::uint64_t seed, const std::string& mode,
            const std::string& smallcell_mode, const std::optional<double>& power,
            const std::optional<int>& antennas, const std::string& out_dir)
{
    wpt::RunOptions opts;
    opts.mode = wpt::parse_network_mode(mode);
    opts.smallcell_mode = wpt::parse_harvest_mode(smallcell_mode);
    opts.power_dbm = power;
    opts.antennas = antennas;
    const auto run = wpt::run_once(fs::path(scenario), seed, opts);

    auto csv = open_output(out_dir, "metrics.csv");
    wpt::write_metrics_csv(csv, run.report);
    auto summary = open_output(out_dir, "summary.json");
    const auto json = wpt::metrics_summary_json(
        run.report, {{"mode", std::string(wpt::to_string(opts.mode))},
                     {"smallcell_mode", std::string(wpt::to_string(opts.smallcell_mode))},
                     {"seed", std::to_string(seed)}});
    summary << json;
    std::cout << json;
    return kExitOk;
}

int cmd_sweep(const GridArgs& args, const std::string& modes)
{
    const auto topo = wpt::load_scenario(args.scenario);
    auto spec = grid_spec(args, topo);
    spec.modes.clear();
    for (const auto& m : wpt::tools::split(modes, ','))
        spec.modes.push_back(wpt::parse_network_mode(m));
    const auto result = wpt::run_sweep(topo, spec);

    auto trials = open_output(args.out, "sweep_trials.csv");
    wpt::write_sweep_trials_csv(trials, result);
    auto summary = open_output(args.out, "sweep_summary.csv");
    wpt::write_sweep_summary_csv(summary, result);
    wpt::write_sweep_summary_csv(std::cout, result);
    return kExitOk;
}

int cmd_compare(const GridArgs& args)
{
    const auto topo = wpt::load_scenario(args.scenario);
    const auto result = wpt::run_compare(topo, grid_spec(args, topo));

    auto trials = open_output(args.out, "compare_trials.csv");
    wpt::write_compare_trials_csv(trials, result);
    auto summary = open_output(args.out, "compare_summary.csv");
    wpt::write_compare_summary_csv(summary, result);
    wpt::write_compare_summary_csv(std::cout, result);
    return kExitOk;
}

int cmd_validate(wpt::ValidationOptions opts, const std::string& scenario,
                 const std::optional<std::uint64_t>& replay)
{
    if (!scenario.empty())
        opts.channel = wpt::load_scenario(scenario).channel;

    wpt::ValidationReport report;
    if (replay) {
        wpt::validate_instance(0, *replay, opts, report);
        report.instances = 1;
    } else {
        report = wpt::run_validation(opts);
    }

    for (const auto& f : report.failures) {
        std::cout << "FAIL instance " << f.instance << " [" << f.check << "] " << f.detail
                  << " (replay with --replay " << f.replay_seed << ")\n";
    }
    std::cout << (report.ok() ? "PASS" : "FAIL") << ": " << report.instances << " instances, "
              << report.checks << " checks, " << report.failures.size() << " failures\n";
    return report.ok() ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cell-less RF wireless power transfer simulator"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Solve one fading realization and report metrics");
    std::string run_scenario, run_mode = "cellless", run_sc_mode = "physical", run_out = ".";
    std::uint64_t run_seed = 0;
    std::optional<double> run_power;
    std::optional<int> run_antennas;
    run->add_option("--scenario", run_scenario, "Scenario JSON file")->required();
    run->add_option("--seed", run_seed, "Channel seed");
    run->add_option("--mode", run_mode, "cellless | smallcell")
        ->check(CLI::IsMember({"cellless", "smallcell"}));
    run->add_option("--smallcell-mode", run_sc_mode, "physical | own-cell")
        ->check(CLI::IsMember({"physical", "own-cell"}));
    run->add_option("--power", run_power, "Override every AP's power budget (dBm)");
    run->add_option("--antennas", run_antennas, "Override every AP's antenna count");
    run->add_option("--out", run_out, "Output directory");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over power and antenna count");
    GridArgs sweep_args;
    std::string sweep_modes = "cellless,smallcell";
    add_grid_options(sweep, sweep_args);
    sweep->add_option("--modes", sweep_modes, "Comma-separated subset of cellless,smallcell");

    // compare
    auto* compare = app.add_subcommand("compare", "Paired cell-less vs small-cell gap sweep");
    GridArgs compare_args;
    add_grid_options(compare, compare_args);

    // validate
    auto* validate = app.add_subcommand("validate", "Randomized optimality checks");
    wpt::ValidationOptions vopts;
    std::string validate_scenario;
    std::optional<std::uint64_t> replay;
    validate->add_option("--instances", vopts.instances, "Number of random instances");
    validate->add_option("--seed", vopts.seed, "Seed for instance generation");
    validate->add_option("--scenario", validate_scenario,
                         "Take channel parameters from this scenario file");
    validate->add_option("--samples", vopts.oracle_samples, "Random-search samples per instance");
    validate->add_flag("--inject-fault", vopts.inject_fault,
                       "Self-test: double one AP's beam power before checking");
    validate->add_option("--replay", replay, "Re-run the single instance with this seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run)
            return cmd_run(run_scenario, run_seed, run_mode, run_sc_mode, run_power,
                           run_antennas, run_out);
        if (*sweep)
            return cmd_sweep(sweep_args, sweep_modes);
        if (*compare)
            return cmd_compare(compare_args);
        if (*validate)
            return cmd_validate(vopts, validate_scenario, replay);
    } catch (const wpt::ScenarioError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const wpt::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
