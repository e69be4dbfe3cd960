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

#include "wpt/channel.hpp"
#include "wpt/eigen_solver.hpp"
#include "wpt/topology.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wpt {

// Decision variables of the joint AP-selection / beamforming problem for a
// K-AP, N-device topology. Indices are positions in Topology::aps / devices.
class BeamAllocation {
public:
    BeamAllocation() = default;
    // All-zero allocation; beam (k, n) has length antenna_counts[k].
    BeamAllocation(std::span<const int> antenna_counts, std::size_t device_count);
    static BeamAllocation zeros(const Topology& topology);

    std::size_t ap_count() const { return beams_.size(); }
    std::size_t device_count() const { return device_count_; }

    const Eigen::VectorXcd& beam(std::size_t k, std::size_t n) const;
    bool selected(std::size_t k, std::size_t n) const;
    std::optional<std::size_t> target(std::size_t k) const { return targets_.at(k); }

    // Sets w_n^k; alpha_n^k follows the closed-form rule alpha = 1 iff ||w||^2 > 0.
    void set_beam(std::size_t k, std::size_t n, Eigen::VectorXcd w);
    void set_target(std::size_t k, std::optional<std::size_t> n) { targets_.at(k) = n; }
    // Raw selection override, for exploring alpha configurations.
    void set_selected(std::size_t k, std::size_t n, bool on);

    // Sum_n ||w_n^k||^2 in watts.
    double transmit_power_w(std::size_t k) const;
    double total_transmit_power_w() const;

private:
    std::size_t device_count_ = 0;
    std::vector<std::vector<Eigen::VectorXcd>> beams_; // [k][n]
    std::vector<std::vector<std::uint8_t>> selection_; // [k][n]
    std::vector<std::optional<std::size_t>> targets_;  // [k]
};

// Result of the single-AP closed-form subproblem.
struct ApSolution {
    Eigen::VectorXcd beamformer; // sqrt(P) * conj(v)
    std::size_t target = 0;
    EigenPair eigen;
};

// Euclidean-norm argmax; ties go to the lowest index.
std::size_t select_target_device(std::span<const ChannelVector> channels);

// Per-AP optimum: one beam at full power along the dominant eigenvector of
// the xi-weighted Gram matrix. The beam is conj(v) so that the literal
// |w^T h|^2 of the harvest model equals the Hermitian form v^H G v.
ApSolution solve_ap(const AccessPoint& ap, std::span<const ChannelVector> channels,
                    std::span<const double> weights, const EigenOptions& options = {});

std::vector<double> conversion_efficiencies(const Topology& topology);

// Decomposes into K independent subproblems; alpha set by ||w||^2 > 0.
BeamAllocation solve_cellless(const Topology& topology, const ChannelRealization& realization,
                              const EigenOptions& options = {});

// Incident (pre-conversion) power at device n in watts:
// Sum_k Sum_n' |alpha_n'^k (w_n'^k)^T h_n^k|^2.
double incident_power_w(const BeamAllocation& allocation, const ChannelRealization& realization,
                        std::size_t n);

// Sum_n xi_n * incident_power_w(n), the total harvested power in watts.
double objective_value(const BeamAllocation& allocation, const ChannelRealization& realization,
                       std::span<const Device> devices);

// Violations of the allocation invariants (power budget, alpha consistency,
// beam lengths, one beam per AP). Empty when the allocation is valid.
std::vector<std::string> check_allocation(const Topology& topology,
                                          const BeamAllocation& allocation,
                                          double power_slack_w = 1e-12);

} // namespace wpt
