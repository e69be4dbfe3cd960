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

#include "wpt/channel.hpp"

#include "wpt/errors.hpp"

#include <cmath>
#include <numbers>

namespace wpt {

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
{
    return mix64(mix64(mix64(seed) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

Rng make_substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
{
    return Rng(substream_seed(seed, a, b));
}

ChannelVector steering_vector(int antenna_count, double angle_rad)
{
    ChannelVector a(antenna_count);
    const double phase_step = std::numbers::pi * std::sin(angle_rad);
    for (int m = 0; m < antenna_count; ++m)
        a[m] = std::polar(1.0, phase_step * m);
    return a;
}

ChannelVector draw_rician_channel(int antenna_count, double k_factor_db, double gain,
                                  double los_angle_rad, Rng& rng)
{
    if (antenna_count < 1)
        throw InvalidArgument("antenna_count must be at least 1");
    if (!(gain > 0.0) || !std::isfinite(gain))
        throw InvalidArgument("channel gain must be positive and finite");
    if (std::isnan(k_factor_db))
        throw InvalidArgument("Rician factor must not be NaN");

    double los_weight = 0.0;
    double scatter_weight = 1.0;
    if (k_factor_db == std::numeric_limits<double>::infinity()) {
        los_weight = 1.0;
        scatter_weight = 0.0;
    } else if (k_factor_db != -std::numeric_limits<double>::infinity()) {
        const double kappa = std::pow(10.0, k_factor_db / 10.0);
        los_weight = std::sqrt(kappa / (kappa + 1.0));
        scatter_weight = std::sqrt(1.0 / (kappa + 1.0));
    }

    ChannelVector h = ChannelVector::Zero(antenna_count);
    if (los_weight > 0.0)
        h += los_weight * steering_vector(antenna_count, los_angle_rad);
    if (scatter_weight > 0.0) {
        std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
        for (int m = 0; m < antenna_count; ++m) {
            const double re = normal(rng);
            const double im = normal(rng);
            h[m] += scatter_weight * std::complex<double>(re, im);
        }
    }
    return std::sqrt(gain) * h;
}

double departure_angle(const Position& ap, const Position& device)
{
    return std::atan2(device.x - ap.x, device.y - ap.y);
}

ChannelRealization::ChannelRealization(std::size_t ap_count, std::size_t device_count,
                                       std::uint64_t seed, std::vector<ChannelVector> entries)
    : ap_count_(ap_count), device_count_(device_count), seed_(seed), entries_(std::move(entries))
{
    if (entries_.size() != ap_count_ * device_count_)
        throw InvalidArgument("channel realization needs exactly K*N entries");
}

const ChannelVector& ChannelRealization::at(std::size_t k, std::size_t n) const
{
    if (k >= ap_count_ || n >= device_count_)
        throw InvalidArgument("channel index out of range");
    return entries_[k * device_count_ + n];
}

std::span<const ChannelVector> ChannelRealization::ap_channels(std::size_t k) const
{
    if (k >= ap_count_)
        throw InvalidArgument("AP index out of range");
    return {entries_.data() + k * device_count_, device_count_};
}

bool ChannelRealization::operator==(const ChannelRealization& other) const
{
    if (ap_count_ != other.ap_count_ || device_count_ != other.device_count_ ||
        seed_ != other.seed_)
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].size() != other.entries_[i].size() || entries_[i] != other.entries_[i])
            return false;
    }
    return true;
}

ChannelRealization generate_realization(const Topology& topology, std::uint64_t seed)
{
    validate(topology);
    const auto& ch = topology.channel;
    std::vector<ChannelVector> entries;
    entries.reserve(topology.ap_count() * topology.device_count());
    for (const auto& ap : topology.aps) {
        for (const auto& dev : topology.devices) {
            const double d = distance(ap.position, dev.position);
            const double gain = path_loss_gain(d, ch.path_loss_exponent, ch.reference_distance_m);
            auto rng = make_substream(seed, static_cast<std::uint64_t>(ap.id),
                                      static_cast<std::uint64_t>(dev.id));
            entries.push_back(draw_rician_channel(ap.antenna_count, ch.rician_k_db, gain,
                                                  departure_angle(ap.position, dev.position),
                                                  rng));
        }
    }
    return {topology.ap_count(), topology.device_count(), seed, std::move(entries)};
}

} // namespace wpt
