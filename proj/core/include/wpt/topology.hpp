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

#include <vector>

namespace wpt {

struct Position {
    double x = 0.0; // meters
    double y = 0.0; // meters
};

double distance(const Position& a, const Position& b);

struct AccessPoint {
    int id = 0;
    Position position;
    int antenna_count = 1;
    double power_budget_dbm = 18.0;      // green-energy budget
    double power_restriction_dbm = 20.0; // regulatory cap

    // min(restriction, budget) in watts.
    double effective_power_w() const;
};

struct Device {
    int id = 0;
    Position position;
    double conversion_efficiency = 0.5; // xi
    double battery_capacity_mah = 4000.0;
    double battery_voltage_v = 5.0;
    double discharge_mw_per_hour = 2058.0;
    double adapter_efficiency = 0.8;
    double body_mass_kg = 50.0;
};

struct ChannelParams {
    double path_loss_exponent = 1.7;
    double reference_distance_m = 1.0;
    double rician_k_db = 10.0; // +inf: pure LOS, -inf: Rayleigh
};

struct Topology {
    std::vector<AccessPoint> aps;
    std::vector<Device> devices;
    ChannelParams channel;

    std::size_t ap_count() const { return aps.size(); }
    std::size_t device_count() const { return devices.size(); }
};

// Throws InvalidArgument describing the first violated invariant: empty lists,
// duplicate ids, antenna_count < 1, non-finite fields, out-of-range device
// parameters, or an AP-device pair closer than the reference distance.
void validate(const Topology& topology);

// 10^((p_dbm - 30) / 10).
double dbm_to_watts(double p_dbm);
double watts_to_dbm(double p_w);

// (max(d, d0) / d0)^(-exponent); unit gain at and below the reference distance.
double path_loss_gain(double distance_m, double exponent, double reference_m);

} // namespace wpt
