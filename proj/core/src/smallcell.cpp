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

#include "wpt/smallcell.hpp"

#include "wpt/errors.hpp"

#include <cmath>

namespace wpt {

HarvestMode parse_harvest_mode(std::string_view text)
{
    if (text == "physical")
        return HarvestMode::physical;
    if (text == "own-cell")
        return HarvestMode::own_cell;
    throw InvalidArgument("unknown small-cell harvest mode '" + std::string(text) +
                          "' (expected physical or own-cell)");
}

std::string_view to_string(HarvestMode mode)
{
    switch (mode) {
    case HarvestMode::physical:
        return "physical";
    case HarvestMode::own_cell:
        return "own-cell";
    }
    throw InvalidArgument("unknown small-cell harvest mode");
}

std::vector<std::size_t> CellAssignment::cell(std::size_t k) const
{
    std::vector<std::size_t> members;
    for (std::size_t n = 0; n < serving_ap.size(); ++n) {
        if (serving_ap[n] == k)
            members.push_back(n);
    }
    return members;
}

CellAssignment assign_cells(const Topology& topology, HarvestMode mode)
{
    if (topology.aps.empty())
        throw InvalidArgument("assign_cells needs at least one AP");
    CellAssignment out;
    out.mode = mode;
    for (const auto& dev : topology.devices) {
        std::size_t best = 0;
        double best_d = distance(topology.aps[0].position, dev.position);
        for (std::size_t k = 1; k < topology.ap_count(); ++k) {
            const double d = distance(topology.aps[k].position, dev.position);
            if (d < best_d || (d == best_d && topology.aps[k].id < topology.aps[best].id)) {
                best = k;
                best_d = d;
            }
        }
        out.serving_ap.push_back(best);
    }
    return out;
}

namespace {

void check_assignment(const CellAssignment& assignment, std::size_t ap_count,
                      std::size_t device_count)
{
    if (assignment.serving_ap.size() != device_count)
        throw InvalidArgument("cell assignment must cover every device exactly once");
    for (auto k : assignment.serving_ap) {
        if (k >= ap_count)
            throw InvalidArgument("cell assignment references a missing AP");
    }
}

} // namespace

BeamAllocation solve_smallcell(const Topology& topology, const ChannelRealization& realization,
                               const CellAssignment& assignment, const EigenOptions& options)
{
    if (realization.ap_count() != topology.ap_count() ||
        realization.device_count() != topology.device_count())
        throw InvalidArgument("realization does not match topology dimensions");
    check_assignment(assignment, topology.ap_count(), topology.device_count());

    auto alloc = BeamAllocation::zeros(topology);
    for (std::size_t k = 0; k < topology.ap_count(); ++k) {
        const auto members = assignment.cell(k);
        if (members.empty())
            continue;
        std::vector<ChannelVector> channels;
        std::vector<double> xi;
        for (auto n : members) {
            channels.push_back(realization.at(k, n));
            xi.push_back(topology.devices[n].conversion_efficiency);
        }
        auto sol = solve_ap(topology.aps[k], channels, xi, options);
        const auto target = members[sol.target];
        alloc.set_target(k, target);
        alloc.set_beam(k, target, std::move(sol.beamformer));
    }
    return alloc;
}

double smallcell_incident_power_w(const BeamAllocation& allocation,
                                  const ChannelRealization& realization,
                                  const CellAssignment& assignment, std::size_t n)
{
    check_assignment(assignment, allocation.ap_count(), allocation.device_count());
    switch (assignment.mode) {
    case HarvestMode::physical:
        return incident_power_w(allocation, realization, n);
    case HarvestMode::own_cell: {
        const auto k = assignment.serving_ap.at(n);
        const auto& h = realization.at(k, n);
        double p = 0.0;
        for (std::size_t np = 0; np < allocation.device_count(); ++np) {
            if (allocation.selected(k, np))
                p += std::norm((allocation.beam(k, np).transpose() * h).value());
        }
        return p;
    }
    }
    throw InvalidArgument("unknown small-cell harvest mode");
}

double smallcell_eh(const BeamAllocation& allocation, const ChannelRealization& realization,
                    std::span<const Device> devices, const CellAssignment& assignment)
{
    if (devices.size() != realization.device_count())
        throw InvalidArgument("device list does not match realization");
    double total = 0.0;
    for (std::size_t n = 0; n < devices.size(); ++n)
        total += devices[n].conversion_efficiency *
                 smallcell_incident_power_w(allocation, realization, assignment, n);
    return total;
}

} // namespace wpt
