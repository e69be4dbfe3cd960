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

#include "wpt/scenario.hpp"

#include "wpt/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

namespace wpt {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<std::string_view> allowed)
{
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (auto a : allowed)
            known = known || key == a;
        if (!known) {
            const auto path = where.empty() ? key : where + "." + key;
            throw ScenarioError("unknown key '" + path + "'", path);
        }
    }
}

const json& require(const json& obj, const std::string& where, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        const auto path = where.empty() ? std::string(key) : where + "." + key;
        throw ScenarioError("missing required key '" + path + "'", path);
    }
    return *it;
}

double as_number(const json& v, const std::string& path)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf" || s == "+inf")
            return std::numeric_limits<double>::infinity();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
    }
    throw ScenarioError("key '" + path + "' must be a number", path);
}

double number(const json& obj, const std::string& where, const char* key)
{
    return as_number(require(obj, where, key), where + "." + key);
}

double number_or(const json& obj, const std::string& where, const char* key, double fallback)
{
    auto it = obj.find(key);
    return it == obj.end() ? fallback : as_number(*it, where + "." + key);
}

int integer(const json& obj, const std::string& where, const char* key)
{
    const auto& v = require(obj, where, key);
    if (!v.is_number_integer()) {
        const auto path = where + "." + key;
        throw ScenarioError("key '" + path + "' must be an integer", path);
    }
    return v.get<int>();
}

const json& array(const json& root, const char* key)
{
    const auto& v = require(root, "", key);
    if (!v.is_array())
        throw ScenarioError(std::string("key '") + key + "' must be a list", key);
    return v;
}

json number_to_json(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

} // namespace

Topology parse_scenario(std::string_view text)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("malformed scenario JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ScenarioError("scenario root must be a JSON object");
    reject_unknown_keys(root, "", {"aps", "devices", "channel"});

    Topology topo;
    const auto& aps = array(root, "aps");
    for (std::size_t i = 0; i < aps.size(); ++i) {
        const auto where = "aps[" + std::to_string(i) + "]";
        const auto& a = aps[i];
        if (!a.is_object())
            throw ScenarioError(where + " must be an object", where);
        reject_unknown_keys(a, where,
                            {"id", "x", "y", "antennas", "power_budget_dbm",
                             "power_restriction_dbm"});
        AccessPoint ap;
        ap.id = integer(a, where, "id");
        ap.position = {number(a, where, "x"), number(a, where, "y")};
        ap.antenna_count = integer(a, where, "antennas");
        ap.power_budget_dbm = number_or(a, where, "power_budget_dbm", ap.power_budget_dbm);
        ap.power_restriction_dbm =
            number_or(a, where, "power_restriction_dbm", ap.power_restriction_dbm);
        topo.aps.push_back(ap);
    }

    const auto& devices = array(root, "devices");
    for (std::size_t i = 0; i < devices.size(); ++i) {
        const auto where = "devices[" + std::to_string(i) + "]";
        const auto& d = devices[i];
        if (!d.is_object())
            throw ScenarioError(where + " must be an object", where);
        reject_unknown_keys(d, where,
                            {"id", "x", "y", "xi", "battery_mah", "voltage_v",
                             "discharge_mw_per_hour", "adapter_efficiency", "body_mass_kg"});
        Device dev;
        dev.id = integer(d, where, "id");
        dev.position = {number(d, where, "x"), number(d, where, "y")};
        dev.conversion_efficiency = number_or(d, where, "xi", dev.conversion_efficiency);
        dev.battery_capacity_mah = number_or(d, where, "battery_mah", dev.battery_capacity_mah);
        dev.battery_voltage_v = number_or(d, where, "voltage_v", dev.battery_voltage_v);
        dev.discharge_mw_per_hour =
            number_or(d, where, "discharge_mw_per_hour", dev.discharge_mw_per_hour);
        dev.adapter_efficiency =
            number_or(d, where, "adapter_efficiency", dev.adapter_efficiency);
        dev.body_mass_kg = number_or(d, where, "body_mass_kg", dev.body_mass_kg);
        topo.devices.push_back(dev);
    }

    if (auto it = root.find("channel"); it != root.end()) {
        if (!it->is_object())
            throw ScenarioError("key 'channel' must be an object", "channel");
        reject_unknown_keys(*it, "channel",
                            {"path_loss_exponent", "reference_distance_m", "rician_k_db"});
        auto& ch = topo.channel;
        ch.path_loss_exponent =
            number_or(*it, "channel", "path_loss_exponent", ch.path_loss_exponent);
        ch.reference_distance_m =
            number_or(*it, "channel", "reference_distance_m", ch.reference_distance_m);
        ch.rician_k_db = number_or(*it, "channel", "rician_k_db", ch.rician_k_db);
    }

    try {
        validate(topo);
    } catch (const InvalidArgument& e) {
        throw ScenarioError(std::string("invalid scenario: ") + e.what());
    }
    return topo;
}

Topology load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScenarioError("cannot open scenario file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (const ScenarioError& e) {
        throw ScenarioError(path.string() + ": " + e.what(), e.key());
    }
}

std::string scenario_to_json(const Topology& topology)
{
    json root = json::object();
    root["aps"] = json::array();
    for (const auto& ap : topology.aps) {
        root["aps"].push_back({{"id", ap.id},
                               {"x", ap.position.x},
                               {"y", ap.position.y},
                               {"antennas", ap.antenna_count},
                               {"power_budget_dbm", ap.power_budget_dbm},
                               {"power_restriction_dbm", ap.power_restriction_dbm}});
    }
    root["devices"] = json::array();
    for (const auto& d : topology.devices) {
        root["devices"].push_back({{"id", d.id},
                                   {"x", d.position.x},
                                   {"y", d.position.y},
                                   {"xi", d.conversion_efficiency},
                                   {"battery_mah", d.battery_capacity_mah},
                                   {"voltage_v", d.battery_voltage_v},
                                   {"discharge_mw_per_hour", d.discharge_mw_per_hour},
                                   {"adapter_efficiency", d.adapter_efficiency},
                                   {"body_mass_kg", d.body_mass_kg}});
    }
    const auto& ch = topology.channel;
    root["channel"] = {{"path_loss_exponent", ch.path_loss_exponent},
                       {"reference_distance_m", ch.reference_distance_m},
                       {"rician_k_db", number_to_json(ch.rician_k_db)}};
    return root.dump(2) + "\n";
}

} // namespace wpt
