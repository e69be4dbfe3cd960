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

#include "wpt/topology.hpp"

#include "wpt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace wpt {

namespace {

void require_finite(double v, const std::string& what)
{
    if (!std::isfinite(v))
        throw InvalidArgument(what + " must be finite");
}

} // namespace

double distance(const Position& a, const Position& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double AccessPoint::effective_power_w() const
{
    return dbm_to_watts(std::min(power_restriction_dbm, power_budget_dbm));
}

double dbm_to_watts(double p_dbm)
{
    require_finite(p_dbm, "power in dBm");
    return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

double watts_to_dbm(double p_w)
{
    if (!(p_w > 0.0) || !std::isfinite(p_w))
        throw InvalidArgument("power in watts must be positive and finite");
    return 10.0 * std::log10(p_w) + 30.0;
}

double path_loss_gain(double distance_m, double exponent, double reference_m)
{
    if (!(reference_m > 0.0))
        throw InvalidArgument("reference distance must be positive");
    if (!(distance_m >= 0.0))
        throw InvalidArgument("distance must be non-negative");
    if (!(exponent >= 0.0))
        throw InvalidArgument("path loss exponent must be non-negative");
    return std::pow(std::max(distance_m, reference_m) / reference_m, -exponent);
}

void validate(const Topology& topology)
{
    if (topology.aps.empty())
        throw InvalidArgument("topology needs at least one access point");
    if (topology.devices.empty())
        throw InvalidArgument("topology needs at least one device");

    const auto& ch = topology.channel;
    require_finite(ch.path_loss_exponent, "path_loss_exponent");
    require_finite(ch.reference_distance_m, "reference_distance_m");
    if (ch.path_loss_exponent < 0.0)
        throw InvalidArgument("path_loss_exponent must be non-negative");
    if (!(ch.reference_distance_m > 0.0))
        throw InvalidArgument("reference_distance_m must be positive");
    if (std::isnan(ch.rician_k_db))
        throw InvalidArgument("rician_k_db must not be NaN");

    std::set<int> ap_ids;
    for (const auto& ap : topology.aps) {
        const auto tag = "AP " + std::to_string(ap.id);
        if (!ap_ids.insert(ap.id).second)
            throw InvalidArgument("duplicate AP id " + std::to_string(ap.id));
        require_finite(ap.position.x, tag + " x");
        require_finite(ap.position.y, tag + " y");
        require_finite(ap.power_budget_dbm, tag + " power_budget_dbm");
        require_finite(ap.power_restriction_dbm, tag + " power_restriction_dbm");
        if (ap.antenna_count < 1)
            throw InvalidArgument(tag + " needs at least one antenna");
    }

    std::set<int> device_ids;
    for (const auto& dev : topology.devices) {
        const auto tag = "device " + std::to_string(dev.id);
        if (!device_ids.insert(dev.id).second)
            throw InvalidArgument("duplicate device id " + std::to_string(dev.id));
        require_finite(dev.position.x, tag + " x");
        require_finite(dev.position.y, tag + " y");
        if (!(dev.conversion_efficiency >= 0.0 && dev.conversion_efficiency <= 1.0))
            throw InvalidArgument(tag + " conversion efficiency must lie in [0, 1]");
        if (!(dev.adapter_efficiency > 0.0 && dev.adapter_efficiency <= 1.0))
            throw InvalidArgument(tag + " adapter efficiency must lie in (0, 1]");
        if (!(dev.battery_capacity_mah > 0.0) || !std::isfinite(dev.battery_capacity_mah))
            throw InvalidArgument(tag + " battery capacity must be positive");
        if (!(dev.battery_voltage_v > 0.0) || !std::isfinite(dev.battery_voltage_v))
            throw InvalidArgument(tag + " battery voltage must be positive");
        if (!(dev.body_mass_kg > 0.0) || !std::isfinite(dev.body_mass_kg))
            throw InvalidArgument(tag + " body mass must be positive");
        if (!(dev.discharge_mw_per_hour >= 0.0) || !std::isfinite(dev.discharge_mw_per_hour))
            throw InvalidArgument(tag + " discharge must be non-negative");

        for (const auto& ap : topology.aps) {
            if (distance(ap.position, dev.position) < ch.reference_distance_m)
                throw InvalidArgument(tag + " is closer to AP " + std::to_string(ap.id) +
                                      " than the reference distance");
        }
    }
}

} // namespace wpt
