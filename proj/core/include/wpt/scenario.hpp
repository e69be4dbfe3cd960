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

#include "wpt/topology.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace wpt {

// Scenario files are JSON objects:
//
//   {
//     "aps":     [{"id", "x", "y", "antennas", "power_budget_dbm", "power_restriction_dbm"}],
//     "devices": [{"id", "x", "y", "xi", "battery_mah", "voltage_v",
//                  "discharge_mw_per_hour", "adapter_efficiency", "body_mass_kg"}],
//     "channel": {"path_loss_exponent", "reference_distance_m", "rician_k_db"}
//   }
//
// `aps` and `devices` are required, as are id/x/y on every entry and `antennas`
// on every AP. Everything else falls back to the Topology defaults. Unknown
// keys are rejected. `rician_k_db` accepts the strings "inf" and "-inf".
//
// All failures throw ScenarioError; JSON syntax errors carry line/column.
Topology parse_scenario(std::string_view text);
Topology load_scenario(const std::filesystem::path& path);

// Inverse of parse_scenario (pretty-printed, keys sorted).
std::string scenario_to_json(const Topology& topology);

} // namespace wpt
