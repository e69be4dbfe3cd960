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

#include "wpt/metrics.hpp"

#include "wpt/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>

namespace wpt {

std::vector<double> eh_per_device(const BeamAllocation& allocation,
                                  const ChannelRealization& realization,
                                  std::span<const Device> devices)
{
    if (devices.size() != realization.device_count())
        throw InvalidArgument("device list does not match realization");
    std::vector<double> eh(devices.size());
    for (std::size_t n = 0; n < devices.size(); ++n)
        eh[n] = devices[n].conversion_efficiency *
                incident_power_w(allocation, realization, n) * 1e3;
    return eh;
}

double transfer_efficiency(double total_eh_mw, const BeamAllocation& allocation)
{
    const double transmit_mw = allocation.total_transmit_power_w() * 1e3;
    if (!(transmit_mw > 0.0))
        throw UndefinedRatioError("transfer efficiency is undefined with zero transmit power");
    return total_eh_mw / transmit_mw;
}

double recharged_energy_per_hour(double eh_mw, double adapter_efficiency)
{
    if (!(eh_mw >= 0.0))
        throw InvalidArgument("harvested power must be non-negative");
    if (!(adapter_efficiency > 0.0 && adapter_efficiency <= 1.0))
        throw InvalidArgument("adapter efficiency must lie in (0, 1]");
    return adapter_efficiency * eh_mw * kSecondsPerHour;
}

double charging_percent(double er, double ed, double voltage_v, double capacity_mah)
{
    if (!(voltage_v > 0.0))
        throw InvalidArgument("battery voltage must be positive");
    if (!(capacity_mah > 0.0))
        throw InvalidArgument("battery capacity must be positive");
    return (er - ed) / voltage_v / capacity_mah * 100.0;
}

ExposureVerdict sar_exposure(double beamed_mw, double body_mass_kg)
{
    if (!(body_mass_kg > 0.0))
        throw InvalidArgument("body mass must be positive");
    if (!(beamed_mw >= 0.0))
        throw InvalidArgument("beamed power must be non-negative");
    ExposureVerdict v;
    v.exposure_w = beamed_mw / 1000.0 * kExposureWindowFactor;
    v.limit_w = kSarLimitWPerKg * body_mass_kg;
    v.pass = v.exposure_w <= v.limit_w;
    return v;
}

MetricsReport compute_metrics(const Topology& topology, const ChannelRealization& realization,
                              const BeamAllocation& allocation, const CellAssignment* assignment)
{
    MetricsReport r;
    const auto n_dev = topology.device_count();
    if (realization.device_count() != n_dev)
        throw InvalidArgument("realization does not match topology dimensions");

    for (std::size_t n = 0; n < n_dev; ++n) {
        const auto& dev = topology.devices[n];
        const double incident_w =
            assignment ? smallcell_incident_power_w(allocation, realization, *assignment, n)
                       : incident_power_w(allocation, realization, n);
        const double beamed_mw = incident_w * 1e3;
        const double eh_mw = dev.conversion_efficiency * beamed_mw;
        const double er = recharged_energy_per_hour(eh_mw, dev.adapter_efficiency);
        const double pct = charging_percent(er, dev.discharge_mw_per_hour,
                                            dev.battery_voltage_v, dev.battery_capacity_mah);
        const auto sar = sar_exposure(beamed_mw, dev.body_mass_kg);

        r.device_ids.push_back(dev.id);
        r.beamed_per_device_mw.push_back(beamed_mw);
        r.eh_per_device_mw.push_back(eh_mw);
        r.total_eh_mw += eh_mw;
        r.charge_percent_per_hour.push_back(pct);
        r.charging.push_back(pct >= 0.0);
        r.exposure_w_per_6min.push_back(sar.exposure_w);
        r.exposure_limit_w.push_back(sar.limit_w);
        r.exposure_pass.push_back(sar.pass);
    }
    r.total_transmit_mw = allocation.total_transmit_power_w() * 1e3;
    r.efficiency = transfer_efficiency(r.total_eh_mw, allocation);
    return r;
}

std::string format_number(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_metrics_csv(std::ostream& out, const MetricsReport& report)
{
    out << "device_id,eh_mw,beamed_mw,per_hour_pct,exposure_w,limit_w,pass\n";
    for (std::size_t n = 0; n < report.device_ids.size(); ++n) {
        out << report.device_ids[n] << ',' << format_number(report.eh_per_device_mw[n]) << ','
            << format_number(report.beamed_per_device_mw[n]) << ','
            << format_number(report.charge_percent_per_hour[n]) << ','
            << format_number(report.exposure_w_per_6min[n]) << ','
            << format_number(report.exposure_limit_w[n]) << ','
            << (report.exposure_pass[n] ? "true" : "false") << '\n';
    }
}

std::string metrics_summary_json(const MetricsReport& report,
                                 const std::vector<std::pair<std::string, std::string>>& extra)
{
    nlohmann::ordered_json j;
    for (const auto& [k, v] : extra)
        j[k] = v;
    j["total_eh_mw"] = report.total_eh_mw;
    j["total_transmit_mw"] = report.total_transmit_mw;
    j["efficiency"] = report.efficiency;
    j["devices"] = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < report.device_ids.size(); ++n) {
        j["devices"].push_back({{"id", report.device_ids[n]},
                                {"eh_mw", report.eh_per_device_mw[n]},
                                {"beamed_mw", report.beamed_per_device_mw[n]},
                                {"per_hour_pct", report.charge_percent_per_hour[n]},
                                {"charging", static_cast<bool>(report.charging[n])},
                                {"exposure_w", report.exposure_w_per_6min[n]},
                                {"limit_w", report.exposure_limit_w[n]},
                                {"pass", static_cast<bool>(report.exposure_pass[n])}});
    }
    j["all_exposure_pass"] =
        std::all_of(report.exposure_pass.begin(), report.exposure_pass.end(),
                    [](bool b) { return b; });
    return j.dump(2) + "\n";
}

} // namespace wpt
