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

#pragma once

#include "wpt/metrics.hpp"
#include "wpt/oracles.hpp"
#include "wpt/smallcell.hpp"
#include "wpt/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wpt {

enum class NetworkMode { cellless, smallcell };

NetworkMode parse_network_mode(std::string_view text);
std::string_view to_string(NetworkMode mode);

// Sets every AP's power budget (P0) and/or antenna count. The power
// restriction (P1) is left alone, so the effective power stays
// min(P1, override).
Topology with_overrides(Topology topology, std::optional<double> power_budget_dbm,
                        std::optional<int> antennas);

struct RunOptions {
    NetworkMode mode = NetworkMode::cellless;
    HarvestMode smallcell_mode = HarvestMode::physical;
    std::optional<double> power_dbm;
    std::optional<int> antennas;
};

struct RunOutcome {
    Topology topology; // after overrides
    ChannelRealization realization;
    BeamAllocation allocation;
    std::optional<CellAssignment> assignment;
    MetricsReport report;
};

RunOutcome run_once(const Topology& topology, std::uint64_t seed, const RunOptions& options = {});
RunOutcome run_once(const std::filesystem::path& scenario, std::uint64_t seed,
                    const RunOptions& options = {});

// Total harvested power (watts) of one network mode on one realization.
double total_harvest_w(const Topology& topology, const ChannelRealization& realization,
                       NetworkMode mode, HarvestMode smallcell_mode = HarvestMode::physical);

// ---------------------------------------------------------------------------
// Sweeps

struct SweepSpec {
    std::vector<double> power_dbm_values;
    std::vector<int> antenna_counts;
    std::size_t trials = 1;
    std::uint64_t base_seed = 0;
    std::vector<NetworkMode> modes{NetworkMode::cellless, NetworkMode::smallcell};
    HarvestMode smallcell_mode = HarvestMode::physical;
};

// Throws InvalidArgument for empty grids, zero trials, or M < 1.
void validate(const SweepSpec& spec);

// Trial i always uses seed base_seed + i, independent of mode, power and grid
// position, so every mode sees the same channels in a given trial.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial);

struct SweepRow {
    NetworkMode mode = NetworkMode::cellless;
    double power_dbm = 0.0;
    int antennas = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double total_eh_mw = 0.0;
    double efficiency = 0.0;
    std::vector<double> eh_mw; // per device
};

struct SweepCellSummary {
    NetworkMode mode = NetworkMode::cellless;
    double power_dbm = 0.0;
    int antennas = 0;
    SampleSummary total_eh_mw;
    SampleSummary efficiency;
    std::vector<double> mean_eh_mw; // per device
};

struct SweepResult {
    std::vector<int> device_ids;
    HarvestMode smallcell_mode = HarvestMode::physical;
    std::vector<SweepRow> rows; // grid order: mode, power, antennas, trial

    std::vector<SweepCellSummary> summarize() const;
};

SweepResult run_sweep(const Topology& topology, const SweepSpec& spec);

void write_sweep_trials_csv(std::ostream& out, const SweepResult& result);
void write_sweep_summary_csv(std::ostream& out, const SweepResult& result);

// ---------------------------------------------------------------------------
// Paired cell-less vs small-cell comparison

struct CompareRow {
    double power_dbm = 0.0;
    int antennas = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double cellless_mw = 0.0;
    double smallcell_mw = 0.0;
    double gap_mw() const { return cellless_mw - smallcell_mw; }
};

struct CompareCellSummary {
    double power_dbm = 0.0;
    int antennas = 0;
    SampleSummary cellless_mw;
    SampleSummary smallcell_mw;
    SampleSummary gap_mw;
    double dominance_fraction = 0.0; // trials with cellless >= smallcell
};

struct CompareResult {
    HarvestMode smallcell_mode = HarvestMode::physical;
    std::vector<CompareRow> rows; // grid order: power, antennas, trial

    std::vector<CompareCellSummary> summarize() const;
    // Gap column of one grid cell, ordered by trial.
    std::vector<double> gaps(double power_dbm, int antennas) const;
};

// Relative slack used when asserting cellless >= smallcell on one realization.
inline constexpr double kDominanceSlack = 1e-12;

CompareResult run_compare(const Topology& topology, const SweepSpec& spec);

void write_compare_trials_csv(std::ostream& out, const CompareResult& result);
void write_compare_summary_csv(std::ostream& out, const CompareResult& result);

// ---------------------------------------------------------------------------
// Randomized validation of the closed-form solution

struct InstanceLimits {
    int max_aps = 3;
    int min_devices = 2;
    int max_devices = 4;
    int min_antennas = 2;
    int max_antennas = 4;
    double room_m = 20.0;
};

// Random topology: APs and devices uniform in the room (resampled until every
// pair clears the reference distance), P0 in [10, 20] dBm, P1 in [15, 25] dBm,
// xi in [0.2, 1].
Topology random_instance(std::uint64_t seed, const InstanceLimits& limits = {},
                         const ChannelParams& channel = {});

struct ValidationOptions {
    std::size_t instances = 50;
    std::uint64_t seed = 0;
    ChannelParams channel;
    InstanceLimits limits;
    std::size_t oracle_samples = 20000;
    int polish_steps = 400;
    // Negative control: doubles AP 0's beam power before the feasibility check.
    bool inject_fault = false;
};

struct ValidationFailure {
    std::size_t instance = 0;
    std::uint64_t replay_seed = 0;
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::vector<ValidationFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Seed of instance i; pass it to validate_instance to replay one case.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t instance);

// Checks one instance: eigen residuals, power feasibility, decomposition
// identity, random-search dominance, alpha-enumeration maximum and small-cell
// dominance. Failures are appended to `report`.
void validate_instance(std::size_t index, std::uint64_t replay_seed,
                       const ValidationOptions& options, ValidationReport& report);

ValidationReport run_validation(const ValidationOptions& options);

} // namespace wpt
