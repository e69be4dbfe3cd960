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

#include "wpt/oracles.hpp"

#include "wpt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

namespace wpt {

namespace {

using cd = std::complex<double>;

// One AP's candidate: active device slots and their beams.
struct ApCandidate {
    std::vector<std::size_t> slots;
    std::vector<Eigen::VectorXcd> beams;
};

using Candidate = std::vector<ApCandidate>;

BeamAllocation materialize(const Topology& topology, const Candidate& cand)
{
    auto alloc = BeamAllocation::zeros(topology);
    for (std::size_t k = 0; k < cand.size(); ++k) {
        for (std::size_t i = 0; i < cand[k].slots.size(); ++i)
            alloc.set_beam(k, cand[k].slots[i], cand[k].beams[i]);
    }
    return alloc;
}

// sum_n xi_n |w^T h_n|^2 over one AP's channels.
double beam_score(std::span<const cd> w, std::span<const ChannelVector> channels,
                  std::span<const double> xi)
{
    double s = 0.0;
    for (std::size_t n = 0; n < channels.size(); ++n) {
        cd acc = 0.0;
        const auto& h = channels[n];
        for (std::size_t m = 0; m < w.size(); ++m)
            acc += w[m] * h[static_cast<Eigen::Index>(m)];
        s += xi[n] * std::norm(acc);
    }
    return s;
}

void polish(Candidate& cand, const Topology& topology, const ChannelRealization& realization,
            std::span<const double> xi)
{
    for (std::size_t k = 0; k < cand.size(); ++k) {
        const auto channels = realization.ap_channels(k);
        double lipschitz = 0.0;
        for (std::size_t n = 0; n < channels.size(); ++n)
            lipschitz += xi[n] * channels[n].squaredNorm();
        if (lipschitz == 0.0)
            continue;
        const double step = 1.0 / lipschitz;
        const double budget = topology.aps[k].effective_power_w();

        for (auto& w : cand[k].beams) {
            Eigen::VectorXcd grad = Eigen::VectorXcd::Zero(w.size());
            for (std::size_t n = 0; n < channels.size(); ++n) {
                const cd proj = (channels[n].transpose() * w).value();
                grad += xi[n] * proj * channels[n].conjugate();
            }
            w += step * grad;
        }
        double used = 0.0;
        for (const auto& w : cand[k].beams)
            used += w.squaredNorm();
        if (used > 0.0) {
            const double scale = std::sqrt(budget / used);
            for (auto& w : cand[k].beams)
                w *= scale;
        }
    }
}

} // namespace

RandomSearchResult oracle_random_search(const Topology& topology,
                                        const ChannelRealization& realization,
                                        const RandomSearchOptions& options)
{
    if (options.samples < 1)
        throw InvalidArgument("oracle_random_search needs at least one sample");
    if (realization.ap_count() != topology.ap_count() ||
        realization.device_count() != topology.device_count())
        throw InvalidArgument("realization does not match topology dimensions");

    const std::size_t ap_count = topology.ap_count();
    const std::size_t n_dev = topology.device_count();
    const auto xi = conversion_efficiencies(topology);
    auto rng = make_substream(options.seed, 0x6f7261636c65ULL);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0);

    RandomSearchResult result;
    Candidate best;
    double best_value = -1.0;
    std::size_t drawn = 0;

    if (options.injected) {
        const auto& inj = *options.injected;
        best.resize(ap_count);
        for (std::size_t k = 0; k < ap_count; ++k) {
            for (std::size_t n = 0; n < n_dev; ++n) {
                if (inj.selected(k, n)) {
                    best[k].slots.push_back(n);
                    best[k].beams.push_back(inj.beam(k, n));
                }
            }
        }
        best_value = objective_value(materialize(topology, best), realization, topology.devices);
        drawn = 1;
    }

    std::vector<std::size_t> order(n_dev);
    std::vector<double> split(n_dev);
    std::vector<std::vector<cd>> dirs(n_dev);
    Candidate cand(ap_count);

    for (; drawn < options.samples; ++drawn) {
        double total = 0.0;
        for (std::size_t k = 0; k < ap_count; ++k) {
            const auto channels = realization.ap_channels(k);
            const auto m = static_cast<std::size_t>(topology.aps[k].antenna_count);
            const double budget = topology.aps[k].effective_power_w();
            const std::size_t active = std::uniform_int_distribution<std::size_t>(1, n_dev)(rng);

            std::iota(order.begin(), order.end(), std::size_t{0});
            double split_sum = 0.0;
            for (std::size_t i = 0; i < active; ++i) {
                std::swap(order[i],
                          order[std::uniform_int_distribution<std::size_t>(i, n_dev - 1)(rng)]);
                split[i] = expo(rng);
                split_sum += split[i];
            }
            for (std::size_t i = 0; i < active; ++i) {
                auto& d = dirs[i];
                d.resize(m);
                double norm2 = 0.0;
                for (auto& c : d) {
                    c = cd(normal(rng), normal(rng));
                    norm2 += std::norm(c);
                }
                const double scale = std::sqrt(budget * split[i] / split_sum / norm2);
                for (auto& c : d)
                    c *= scale;
                total += beam_score(d, channels, xi);
            }

            auto& ac = cand[k];
            ac.slots.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(active));
            ac.beams.resize(active);
            for (std::size_t i = 0; i < active; ++i)
                ac.beams[i] = Eigen::Map<const Eigen::VectorXcd>(dirs[i].data(),
                                                                 static_cast<Eigen::Index>(m));
        }
        if (total > best_value) {
            best_value = total;
            best = cand;
        }
    }

    // Rescore the winner through the reference objective.
    result.best_sampled = objective_value(materialize(topology, best), realization,
                                          topology.devices);
    result.polished = result.best_sampled;
    result.samples = options.samples;

    Candidate work = best;
    for (int step = 0; step < options.polish_steps; ++step) {
        polish(work, topology, realization, xi);
        const double v = objective_value(materialize(topology, work), realization,
                                         topology.devices);
        result.polished = std::max(result.polished, v);
    }
    result.best_objective = std::max(result.best_sampled, result.polished);
    return result;
}

AlphaEnumeration::AlphaEnumeration(std::size_t ap_count, std::size_t device_count,
                                   std::vector<double> values)
    : ap_count_(ap_count), device_count_(device_count), values_(std::move(values))
{
    if (values_.size() != (std::size_t{1} << (ap_count_ * device_count_)))
        throw InvalidArgument("alpha table must have 2^(K*N) entries");
}

double AlphaEnumeration::best() const
{
    return *std::max_element(values_.begin(), values_.end());
}

AlphaEnumeration oracle_alpha_enumeration(const Topology& topology,
                                          const ChannelRealization& realization,
                                          const EigenOptions& options)
{
    const std::size_t ap_count = topology.ap_count();
    const std::size_t n_dev = topology.device_count();
    if (ap_count * n_dev > kMaxEnumeratedPairs)
        throw CapacityError("alpha enumeration supports at most " +
                            std::to_string(kMaxEnumeratedPairs) + " (AP, device) pairs, got " +
                            std::to_string(ap_count * n_dev));
    if (realization.ap_count() != ap_count || realization.device_count() != n_dev)
        throw InvalidArgument("realization does not match topology dimensions");

    const auto xi = conversion_efficiencies(topology);
    std::vector<Eigen::VectorXcd> optimal_beam;
    for (std::size_t k = 0; k < ap_count; ++k) {
        const auto pair = largest_eigenpair(build_gram(realization.ap_channels(k), xi), options);
        optimal_beam.push_back(std::sqrt(topology.aps[k].effective_power_w()) *
                               pair.eigenvector.conjugate());
    }

    const std::uint32_t configs = std::uint32_t{1} << (ap_count * n_dev);
    std::vector<double> values(configs, 0.0);
    for (std::uint32_t mask = 0; mask < configs; ++mask) {
        auto alloc = BeamAllocation::zeros(topology);
        for (std::size_t k = 0; k < ap_count; ++k) {
            bool placed = false;
            for (std::size_t n = 0; n < n_dev; ++n) {
                if (!(mask >> (k * n_dev + n) & 1U))
                    continue;
                if (!placed) {
                    alloc.set_beam(k, n, optimal_beam[k]);
                    placed = true;
                }
                alloc.set_selected(k, n, true);
            }
        }
        values[mask] = objective_value(alloc, realization, topology.devices);
    }
    return AlphaEnumeration(ap_count, n_dev, std::move(values));
}

} // namespace wpt
