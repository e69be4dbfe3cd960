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

#include "wpt/optimizer.hpp"
#include "wpt/smallcell.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace wpt {

// IEEE C95.1 whole-body SAR restriction, W/kg over any 6-minute window.
inline constexpr double kSarLimitWPerKg = 0.08;
// Seconds multiplier applied to the beamed power in the exposure check.
inline constexpr double kExposureWindowFactor = 360.0;
inline constexpr double kSecondsPerHour = 3600.0;

struct ExposureVerdict {
    double exposure_w = 0.0;
    double limit_w = 0.0;
    bool pass = true;
};

struct MetricsReport {
    std::vector<int> device_ids;
    std::vector<double> eh_per_device_mw;     // xi_n * beamed
    std::vector<double> beamed_per_device_mw; // incident, before conversion
    double total_eh_mw = 0.0;
    double total_transmit_mw = 0.0;
    double efficiency = 0.0; // total_eh / total_transmit
    std::vector<double> charge_percent_per_hour;
    std::vector<bool> charging; // Per_n >= 0
    std::vector<double> exposure_w_per_6min;
    std::vector<double> exposure_limit_w;
    std::vector<bool> exposure_pass;
};

// EH_n in milliwatts over every (k, n') beam, literal transpose products.
std::vector<double> eh_per_device(const BeamAllocation& allocation,
                                  const ChannelRealization& realization,
                                  std::span<const Device> devices);

// total_eh_mw / total transmit power. Throws UndefinedRatioError when nothing
// is transmitted.
double transfer_efficiency(double total_eh_mw, const BeamAllocation& allocation);

// ER = adapter_efficiency * eh_mw * 3600.
double recharged_energy_per_hour(double eh_mw, double adapter_efficiency);

// ((er - ed) / voltage) / capacity * 100. Negative when discharge dominates.
double charging_percent(double er, double ed, double voltage_v, double capacity_mah);

// exposure = beamed_mw / 1000 * 360, limit = 0.08 * mass; pass iff exposure <= limit.
ExposureVerdict sar_exposure(double beamed_mw, double body_mass_kg);

// Full per-device report. With a small-cell assignment the incident power
// follows its harvest mode; without one every beam counts.
MetricsReport compute_metrics(const Topology& topology, const ChannelRealization& realization,
                              const BeamAllocation& allocation,
                              const CellAssignment* assignment = nullptr);

// device_id,eh_mw,beamed_mw,per_hour_pct,exposure_w,limit_w,pass
void write_metrics_csv(std::ostream& out, const MetricsReport& report);
// JSON summary of the totals plus per-device arrays; `extra` fields are merged in.
std::string metrics_summary_json(const MetricsReport& report,
                                 const std::vector<std::pair<std::string, std::string>>& extra = {});

// Shortest round-trip decimal form (C locale, '.' separator).
std::string format_number(double v);

} // namespace wpt
