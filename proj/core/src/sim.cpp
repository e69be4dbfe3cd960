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

#include "wpt/sim.hpp"

#include "wpt/errors.hpp"
#include "wpt/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace wpt {

NetworkMode parse_network_mode(std::string_view text)
{
    if (text == "cellless")
        return NetworkMode::cellless;
    if (text == "smallcell")
        return NetworkMode::smallcell;
    throw InvalidArgument("unknown network mode '" + std::string(text) +
                          "' (expected cellless or smallcell)");
}

std::string_view to_string(NetworkMode mode)
{
    return mode == NetworkMode::cellless ? "cellless" : "smallcell";
}

Topology with_overrides(Topology topology, std::optional<double> power_budget_dbm,
                        std::optional<int> antennas)
{
    if (antennas && *antennas < 1)
        throw InvalidArgument("antenna override must be at least 1");
    if (power_budget_dbm && !std::isfinite(*power_budget_dbm))
        throw InvalidArgument("power override must be finite");
    for (auto& ap : topology.aps) {
        if (power_budget_dbm)
            ap.power_budget_dbm = *power_budget_dbm;
        if (antennas)
            ap.antenna_count = *antennas;
    }
    return topology;
}

RunOutcome run_once(const Topology& topology, std::uint64_t seed, const RunOptions& options)
{
    RunOutcome out{with_overrides(topology, options.power_dbm, options.antennas), {}, {}, {}, {}};
    out.realization = generate_realization(out.topology, seed);
    if (options.mode == NetworkMode::cellless) {
        out.allocation = solve_cellless(out.topology, out.realization);
        out.report = compute_metrics(out.topology, out.realization, out.allocation);
    } else {
        out.assignment = assign_cells(out.topology, options.smallcell_mode);
        out.allocation = solve_smallcell(out.topology, out.realization, *out.assignment);
        out.report =
            compute_metrics(out.topology, out.realization, out.allocation, &*out.assignment);
    }
    return out;
}

RunOutcome run_once(const std::filesystem::path& scenario, std::uint64_t seed,
                    const RunOptions& options)
{
    return run_once(load_scenario(scenario), seed, options);
}

double total_harvest_w(const Topology& topology, const ChannelRealization& realization,
                       NetworkMode mode, HarvestMode smallcell_mode)
{
    if (mode == NetworkMode::cellless)
        return objective_value(solve_cellless(topology, realization), realization,
                               topology.devices);
    const auto cells = assign_cells(topology, smallcell_mode);
    return smallcell_eh(solve_smallcell(topology, realization, cells), realization,
                        topology.devices, cells);
}

// ---------------------------------------------------------------------------

void validate(const SweepSpec& spec)
{
    if (spec.power_dbm_values.empty())
        throw InvalidArgument("sweep needs at least one power value");
    if (spec.antenna_counts.empty())
        throw InvalidArgument("sweep needs at least one antenna count");
    if (spec.modes.empty())
        throw InvalidArgument("sweep needs at least one network mode");
    if (spec.trials < 1)
        throw InvalidArgument("sweep needs at least one trial");
    for (double p : spec.power_dbm_values) {
        if (!std::isfinite(p))
            throw InvalidArgument("sweep power values must be finite");
    }
    for (int m : spec.antenna_counts) {
        if (m < 1)
            throw InvalidArgument("sweep antenna counts must be at least 1");
    }
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial)
{
    return base_seed + static_cast<std::uint64_t>(trial);
}

SweepResult run_sweep(const Topology& topology, const SweepSpec& spec)
{
    validate(spec);
    validate(topology);
    SweepResult result;
    result.smallcell_mode = spec.smallcell_mode;
    for (const auto& d : topology.devices)
        result.device_ids.push_back(d.id);

    for (auto mode : spec.modes) {
        for (double power : spec.power_dbm_values) {
            for (int m : spec.antenna_counts) {
                const auto topo = with_overrides(topology, power, m);
                for (std::size_t t = 0; t < spec.trials; ++t) {
                    RunOptions opts{mode, spec.smallcell_mode, std::nullopt, std::nullopt};
                    const auto run = run_once(topo, trial_seed(spec.base_seed, t), opts);
                    result.rows.push_back({mode, power, m, t, run.realization.seed(),
                                           run.report.total_eh_mw, run.report.efficiency,
                                           run.report.eh_per_device_mw});
                }
            }
        }
    }
    return result;
}

std::vector<SweepCellSummary> SweepResult::summarize() const
{
    std::vector<SweepCellSummary> cells;
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j < rows.size() && rows[j].mode == rows[i].mode &&
               rows[j].power_dbm == rows[i].power_dbm && rows[j].antennas == rows[i].antennas)
            ++j;
        std::vector<double> totals, effs;
        std::vector<double> per_dev(device_ids.size(), 0.0);
        for (std::size_t r = i; r < j; ++r) {
            totals.push_back(rows[r].total_eh_mw);
            effs.push_back(rows[r].efficiency);
            for (std::size_t n = 0; n < per_dev.size(); ++n)
                per_dev[n] += rows[r].eh_mw[n];
        }
        for (auto& v : per_dev)
            v /= static_cast<double>(j - i);
        cells.push_back({rows[i].mode, rows[i].power_dbm, rows[i].antennas, wpt::summarize(totals),
                         wpt::summarize(effs), std::move(per_dev)});
        i = j;
    }
    return cells;
}

void write_sweep_trials_csv(std::ostream& out, const SweepResult& result)
{
    out << "mode,power_dbm,antennas,trial,seed,total_eh_mw,efficiency";
    for (int id : result.device_ids)
        out << ",eh_mw_dev" << id;
    out << '\n';
    for (const auto& r : result.rows) {
        out << to_string(r.mode) << ',' << format_number(r.power_dbm) << ',' << r.antennas << ','
            << r.trial << ',' << r.seed << ',' << format_number(r.total_eh_mw) << ','
            << format_number(r.efficiency);
        for (double v : r.eh_mw)
            out << ',' << format_number(v);
        out << '\n';
    }
}

void write_sweep_summary_csv(std::ostream& out, const SweepResult& result)
{
    out << "mode,power_dbm,antennas,trials,mean_total_eh_mw,se_total_eh_mw,mean_efficiency,"
           "se_efficiency";
    for (int id : result.device_ids)
        out << ",mean_eh_mw_dev" << id;
    out << '\n';
    for (const auto& c : result.summarize()) {
        out << to_string(c.mode) << ',' << format_number(c.power_dbm) << ',' << c.antennas << ','
            << c.total_eh_mw.count << ',' << format_number(c.total_eh_mw.mean) << ','
            << format_number(c.total_eh_mw.std_error) << ',' << format_number(c.efficiency.mean)
            << ',' << format_number(c.efficiency.std_error);
        for (double v : c.mean_eh_mw)
            out << ',' << format_number(v);
        out << '\n';
    }
}

// ---------------------------------------------------------------------------

CompareResult run_compare(const Topology& topology, const SweepSpec& spec)
{
    validate(spec);
    validate(topology);
    CompareResult result;
    result.smallcell_mode = spec.smallcell_mode;
    for (double power : spec.power_dbm_values) {
        for (int m : spec.antenna_counts) {
            const auto topo = with_overrides(topology, power, m);
            const auto cells = assign_cells(topo, spec.smallcell_mode);
            for (std::size_t t = 0; t < spec.trials; ++t) {
                const auto seed = trial_seed(spec.base_seed, t);
                const auto realization = generate_realization(topo, seed);
                const double cl = objective_value(solve_cellless(topo, realization), realization,
                                                  topo.devices);
                const double sc = smallcell_eh(solve_smallcell(topo, realization, cells),
                                               realization, topo.devices, cells);
                result.rows.push_back({power, m, t, seed, cl * 1e3, sc * 1e3});
            }
        }
    }
    return result;
}

std::vector<CompareCellSummary> CompareResult::summarize() const
{
    std::vector<CompareCellSummary> cells;
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j < rows.size() && rows[j].power_dbm == rows[i].power_dbm &&
               rows[j].antennas == rows[i].antennas)
            ++j;
        std::vector<double> cl, sc, gap;
        std::size_t dominated = 0;
        for (std::size_t r = i; r < j; ++r) {
            cl.push_back(rows[r].cellless_mw);
            sc.push_back(rows[r].smallcell_mw);
            gap.push_back(rows[r].gap_mw());
            if (rows[r].cellless_mw >= rows[r].smallcell_mw * (1.0 - kDominanceSlack))
                ++dominated;
        }
        cells.push_back({rows[i].power_dbm, rows[i].antennas, wpt::summarize(cl),
                         wpt::summarize(sc), wpt::summarize(gap),
                         static_cast<double>(dominated) / static_cast<double>(j - i)});
        i = j;
    }
    return cells;
}

std::vector<double> CompareResult::gaps(double power_dbm, int antennas) const
{
    std::vector<double> out;
    for (const auto& r : rows) {
        if (r.power_dbm == power_dbm && r.antennas == antennas)
            out.push_back(r.gap_mw());
    }
    return out;
}

void write_compare_trials_csv(std::ostream& out, const CompareResult& result)
{
    out << "power_dbm,antennas,trial,seed,cellless_eh_mw,smallcell_eh_mw,gap_mw\n";
    for (const auto& r : result.rows) {
        out << format_number(r.power_dbm) << ',' << r.antennas << ',' << r.trial << ',' << r.seed
            << ',' << format_number(r.cellless_mw) << ',' << format_number(r.smallcell_mw) << ','
            << format_number(r.gap_mw()) << '\n';
    }
}

void write_compare_summary_csv(std::ostream& out, const CompareResult& result)
{
    out << "power_dbm,antennas,trials,smallcell_mode,mean_cellless_eh_mw,se_cellless_eh_mw,"
           "mean_smallcell_eh_mw,se_smallcell_eh_mw,mean_gap_mw,se_gap_mw,dominance_fraction\n";
    for (const auto& c : result.summarize()) {
        out << format_number(c.power_dbm) << ',' << c.antennas << ',' << c.gap_mw.count << ','
            << to_string(result.smallcell_mode) << ',' << format_number(c.cellless_mw.mean) << ','
            << format_number(c.cellless_mw.std_error) << ',' << format_number(c.smallcell_mw.mean)
            << ',' << format_number(c.smallcell_mw.std_error) << ','
            << format_number(c.gap_mw.mean) << ',' << format_number(c.gap_mw.std_error) << ','
            << format_number(c.dominance_fraction) << '\n';
    }
}

// ---------------------------------------------------------------------------

Topology random_instance(std::uint64_t seed, const InstanceLimits& limits,
                         const ChannelParams& channel)
{
    if (limits.max_aps < 1 || limits.min_devices < 1 || limits.max_devices < limits.min_devices ||
        limits.min_antennas < 1 || limits.max_antennas < limits.min_antennas ||
        !(limits.room_m > 2.0 * channel.reference_distance_m))
        throw InvalidArgument("inconsistent random instance limits");

    auto rng = make_substream(seed, 0x696e7374ULL);
    std::uniform_int_distribution<int> n_aps(1, limits.max_aps);
    std::uniform_int_distribution<int> n_devs(limits.min_devices, limits.max_devices);
    std::uniform_int_distribution<int> n_ant(limits.min_antennas, limits.max_antennas);
    std::uniform_real_distribution<double> coord(0.0, limits.room_m);
    std::uniform_real_distribution<double> budget(10.0, 20.0);
    std::uniform_real_distribution<double> restriction(15.0, 25.0);
    std::uniform_real_distribution<double> xi(0.2, 1.0);

    Topology topo;
    topo.channel = channel;
    const int k_count = n_aps(rng);
    const int n_count = n_devs(rng);
    for (int k = 0; k < k_count; ++k) {
        AccessPoint ap;
        ap.id = k + 1;
        ap.position = {coord(rng), coord(rng)};
        ap.antenna_count = n_ant(rng);
        ap.power_budget_dbm = budget(rng);
        ap.power_restriction_dbm = restriction(rng);
        topo.aps.push_back(ap);
    }
    for (int n = 0; n < n_count; ++n) {
        Device dev;
        dev.id = n + 1;
        dev.conversion_efficiency = xi(rng);
        for (;;) {
            dev.position = {coord(rng), coord(rng)};
            const bool clear = std::all_of(topo.aps.begin(), topo.aps.end(), [&](const auto& ap) {
                return distance(ap.position, dev.position) >= channel.reference_distance_m;
            });
            if (clear)
                break;
        }
        topo.devices.push_back(dev);
    }
    validate(topo);
    return topo;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t instance)
{
    return substream_seed(seed, 0x76616c6964ULL, instance);
}

namespace {

bool relative_close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

} // namespace

void validate_instance(std::size_t index, std::uint64_t replay_seed,
                       const ValidationOptions& options, ValidationReport& report)
{
    auto fail = [&](std::string check, std::string detail) {
        report.failures.push_back({index, replay_seed, std::move(check), std::move(detail)});
    };

    const auto topo = random_instance(replay_seed, options.limits, options.channel);
    const auto realization = generate_realization(topo, replay_seed);
    const auto xi = conversion_efficiencies(topo);

    double decomposed = 0.0;
    for (std::size_t k = 0; k < topo.ap_count(); ++k) {
        const auto gram = build_gram(realization.ap_channels(k), xi, topo.aps[k].id);
        const auto pair = largest_eigenpair(gram);
        ++report.checks;
        if (!(pair.residual <= 1e-10 * std::max(1.0, pair.eigenvalue)))
            fail("eigen-residual", "AP " + std::to_string(topo.aps[k].id) + " residual " +
                                       fmt(pair.residual));
        decomposed += topo.aps[k].effective_power_w() * pair.eigenvalue;
    }

    auto alloc = solve_cellless(topo, realization);
    if (options.inject_fault) {
        const auto t = alloc.target(0).value_or(0);
        alloc.set_beam(0, t, std::sqrt(2.0) * alloc.beam(0, t));
    }
    ++report.checks;
    for (const auto& issue : check_allocation(topo, alloc))
        fail("feasibility", issue);

    const double closed = objective_value(alloc, realization, topo.devices);
    ++report.checks;
    if (!options.inject_fault && !relative_close(closed, decomposed, 1e-12))
        fail("decomposition", "objective " + fmt(closed) + " vs sum P*lambda " + fmt(decomposed));

    RandomSearchOptions ro;
    ro.samples = options.oracle_samples;
    ro.seed = replay_seed;
    ro.polish_steps = options.polish_steps;
    const auto oracle = oracle_random_search(topo, realization, ro);
    ++report.checks;
    if (oracle.best_objective > closed * (1.0 + 1e-9))
        fail("oracle-dominance", "random search " + fmt(oracle.best_objective) +
                                     " beats closed form " + fmt(closed));

    if (topo.ap_count() * topo.device_count() <= kMaxEnumeratedPairs) {
        const auto table = oracle_alpha_enumeration(topo, realization);
        ++report.checks;
        if (table.best() != table.all_ones())
            fail("alpha-reduction", "best configuration " + fmt(table.best()) +
                                        " differs from all-ones " + fmt(table.all_ones()));
    }

    const auto cells = assign_cells(topo, HarvestMode::physical);
    const double small = smallcell_eh(solve_smallcell(topo, realization, cells), realization,
                                      topo.devices, cells);
    ++report.checks;
    if (closed < small * (1.0 - kDominanceSlack))
        fail("smallcell-dominance", "cell-less " + fmt(closed) + " below small-cell " + fmt(small));
}

ValidationReport run_validation(const ValidationOptions& options)
{
    if (options.instances < 1)
        throw InvalidArgument("validation needs at least one instance");
    ValidationReport report;
    for (std::size_t i = 0; i < options.instances; ++i) {
        validate_instance(i, instance_seed(options.seed, i), options, report);
        ++report.instances;
    }
    return report;
}

} // namespace wpt
