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

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace wpt {

// h_n^k, one complex amplitude per AP antenna.
using ChannelVector = Eigen::VectorXcd;

// 64-bit generator used for every random draw in the library.
using Rng = std::mt19937_64;

// Stateless SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Seed of an independent sub-stream keyed by (seed, a, b). Sub-streams for
// different keys are decorrelated through the SplitMix64 finalizer, so the
// order in which streams are consumed never matters.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

// Rng for the sub-stream keyed by (seed, a, b).
Rng make_substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

// Half-wavelength ULA response: entry m is exp(j * pi * m * sin(theta)).
ChannelVector steering_vector(int antenna_count, double angle_rad);

// sqrt(gain) * ( sqrt(k/(k+1)) a(theta) + sqrt(1/(k+1)) z ), z ~ CN(0, I).
// k_factor_db = +inf gives the pure LOS channel (no draws from rng),
// k_factor_db = -inf gives Rayleigh fading.
ChannelVector draw_rician_channel(int antenna_count, double k_factor_db, double gain,
                                  double los_angle_rad, Rng& rng);

// Angle of the device as seen from the AP array broadside (+y axis), with the
// array laid out along +x.
double departure_angle(const Position& ap, const Position& device);

// One fading draw for every (AP, device) pair of a topology.
class ChannelRealization {
public:
    ChannelRealization() = default;
    ChannelRealization(std::size_t ap_count, std::size_t device_count, std::uint64_t seed,
                       std::vector<ChannelVector> entries);

    std::size_t ap_count() const { return ap_count_; }
    std::size_t device_count() const { return device_count_; }
    std::uint64_t seed() const { return seed_; }

    // Channel between AP index k and device index n.
    const ChannelVector& at(std::size_t k, std::size_t n) const;
    // All N channels of AP index k, ordered by device index.
    std::span<const ChannelVector> ap_channels(std::size_t k) const;

    bool operator==(const ChannelRealization& other) const;

private:
    std::size_t ap_count_ = 0;
    std::size_t device_count_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<ChannelVector> entries_; // row-major [k][n]
};

// Pure function of (topology, seed). The (k, n) entry is drawn from the
// sub-stream keyed by (seed, ap id, device id).
ChannelRealization generate_realization(const Topology& topology, std::uint64_t seed);

} // namespace wpt
