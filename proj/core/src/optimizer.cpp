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

#include "wpt/optimizer.hpp"

#include "wpt/errors.hpp"

#include <cmath>

namespace wpt {

BeamAllocation::BeamAllocation(std::span<const int> antenna_counts, std::size_t device_count)
    : device_count_(device_count)
{
    for (int m : antenna_counts) {
        if (m < 1)
            throw InvalidArgument("antenna count must be at least 1");
        beams_.emplace_back(device_count, Eigen::VectorXcd::Zero(m));
        selection_.emplace_back(device_count, std::uint8_t{0});
        targets_.emplace_back();
    }
}

BeamAllocation BeamAllocation::zeros(const Topology& topology)
{
    std::vector<int> counts;
    for (const auto& ap : topology.aps)
        counts.push_back(ap.antenna_count);
    return BeamAllocation(counts, topology.device_count());
}

const Eigen::VectorXcd& BeamAllocation::beam(std::size_t k, std::size_t n) const
{
    return beams_.at(k).at(n);
}

bool BeamAllocation::selected(std::size_t k, std::size_t n) const
{
    return selection_.at(k).at(n) != 0;
}

void BeamAllocation::set_beam(std::size_t k, std::size_t n, Eigen::VectorXcd w)
{
    auto& slot = beams_.at(k).at(n);
    if (w.size() != slot.size())
        throw InvalidArgument("beamformer length must match the AP antenna count");
    selection_[k][n] = w.squaredNorm() > 0.0 ? 1 : 0;
    slot = std::move(w);
}

void BeamAllocation::set_selected(std::size_t k, std::size_t n, bool on)
{
    selection_.at(k).at(n) = on ? 1 : 0;
}

double BeamAllocation::transmit_power_w(std::size_t k) const
{
    double p = 0.0;
    for (const auto& w : beams_.at(k))
        p += w.squaredNorm();
    return p;
}

double BeamAllocation::total_transmit_power_w() const
{
    double p = 0.0;
    for (std::size_t k = 0; k < beams_.size(); ++k)
        p += transmit_power_w(k);
    return p;
}

std::size_t select_target_device(std::span<const ChannelVector> channels)
{
    if (channels.empty())
        throw InvalidArgument("select_target_device needs at least one channel");
    std::size_t best = 0;
    double best_norm = channels[0].norm();
    for (std::size_t n = 1; n < channels.size(); ++n) {
        const double v = channels[n].norm();
        if (v > best_norm) {
            best = n;
            best_norm = v;
        }
    }
    return best;
}

ApSolution solve_ap(const AccessPoint& ap, std::span<const ChannelVector> channels,
                    std::span<const double> weights, const EigenOptions& options)
{
    for (const auto& h : channels) {
        if (h.size() != ap.antenna_count)
            throw InvalidArgument("channel length differs from AP " + std::to_string(ap.id) +
                                  " antenna count");
    }
    ApSolution sol;
    sol.eigen = largest_eigenpair(build_gram(channels, weights, ap.id), options);
    sol.target = select_target_device(channels);
    sol.beamformer = std::sqrt(ap.effective_power_w()) * sol.eigen.eigenvector.conjugate();
    return sol;
}

std::vector<double> conversion_efficiencies(const Topology& topology)
{
    std::vector<double> xi;
    xi.reserve(topology.device_count());
    for (const auto& d : topology.devices)
        xi.push_back(d.conversion_efficiency);
    return xi;
}

BeamAllocation solve_cellless(const Topology& topology, const ChannelRealization& realization,
                              const EigenOptions& options)
{
    if (realization.ap_count() != topology.ap_count() ||
        realization.device_count() != topology.device_count())
        throw InvalidArgument("realization does not match topology dimensions");

    const auto xi = conversion_efficiencies(topology);
    auto alloc = BeamAllocation::zeros(topology);
    for (std::size_t k = 0; k < topology.ap_count(); ++k) {
        auto sol = solve_ap(topology.aps[k], realization.ap_channels(k), xi, options);
        alloc.set_target(k, sol.target);
        alloc.set_beam(k, sol.target, std::move(sol.beamformer));
    }
    return alloc;
}

namespace {

void check_dimensions(const BeamAllocation& allocation, const ChannelRealization& realization)
{
    if (allocation.ap_count() != realization.ap_count() ||
        allocation.device_count() != realization.device_count())
        throw InvalidArgument("allocation and realization dimensions differ");
}

// |w^T h|^2, the transpose (not Hermitian) inner product.
double transpose_gain(const Eigen::VectorXcd& w, const ChannelVector& h)
{
    if (w.size() != h.size())
        throw InvalidArgument("beamformer and channel lengths differ");
    return std::norm((w.transpose() * h).value());
}

} // namespace

double incident_power_w(const BeamAllocation& allocation, const ChannelRealization& realization,
                        std::size_t n)
{
    check_dimensions(allocation, realization);
    double p = 0.0;
    for (std::size_t k = 0; k < allocation.ap_count(); ++k) {
        const auto& h = realization.at(k, n);
        for (std::size_t np = 0; np < allocation.device_count(); ++np) {
            if (allocation.selected(k, np))
                p += transpose_gain(allocation.beam(k, np), h);
        }
    }
    return p;
}

double objective_value(const BeamAllocation& allocation, const ChannelRealization& realization,
                       std::span<const Device> devices)
{
    check_dimensions(allocation, realization);
    if (devices.size() != realization.device_count())
        throw InvalidArgument("device list does not match realization");
    double total = 0.0;
    for (std::size_t n = 0; n < devices.size(); ++n)
        total += devices[n].conversion_efficiency * incident_power_w(allocation, realization, n);
    return total;
}

std::vector<std::string> check_allocation(const Topology& topology,
                                          const BeamAllocation& allocation, double power_slack_w)
{
    std::vector<std::string> issues;
    if (allocation.ap_count() != topology.ap_count() ||
        allocation.device_count() != topology.device_count()) {
        issues.push_back("allocation dimensions differ from topology");
        return issues;
    }
    for (std::size_t k = 0; k < topology.ap_count(); ++k) {
        const auto& ap = topology.aps[k];
        const auto tag = "AP " + std::to_string(ap.id);
        const double budget = ap.effective_power_w();
        const double used = allocation.transmit_power_w(k);
        if (used > budget + power_slack_w)
            issues.push_back(tag + " transmits " + std::to_string(used) + " W over its budget " +
                             std::to_string(budget) + " W");
        int active = 0;
        for (std::size_t n = 0; n < topology.device_count(); ++n) {
            const auto& w = allocation.beam(k, n);
            if (w.size() != ap.antenna_count)
                issues.push_back(tag + " beam length differs from antenna count");
            const bool on = w.squaredNorm() > 0.0;
            if (on != allocation.selected(k, n))
                issues.push_back(tag + " selection flag disagrees with beam power for device " +
                                 std::to_string(topology.devices[n].id));
            active += on ? 1 : 0;
        }
        if (active > 1)
            issues.push_back(tag + " forms " + std::to_string(active) + " beams");
    }
    return issues;
}

} // namespace wpt
