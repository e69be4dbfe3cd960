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

#include "wpt/optimizer.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wpt {

// Validation oracles for the mixed-integer problem. They never call
// solve_ap / solve_cellless and score candidates with objective_value.

struct RandomSearchOptions {
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    // Projected gradient-ascent steps applied to the best sample; 0 disables.
    int polish_steps = 400;
    // Evaluated as the first sample when set.
    std::optional<BeamAllocation> injected;
};

struct RandomSearchResult {
    double best_objective = 0.0; // max(best_sampled, polished), watts
    double best_sampled = 0.0;
    double polished = 0.0;
    std::size_t samples = 0;
};

// Draws feasible beam sets: per AP a random number of active beams with
// CN(0, I) directions and a random split of the full power budget, scored by
// the literal harvest objective. The best sample is then polished by
// normalized gradient ascent on the same objective.
RandomSearchResult oracle_random_search(const Topology& topology,
                                        const ChannelRealization& realization,
                                        const RandomSearchOptions& options);

// Optimal objective for every binary selection matrix. Configuration `mask`
// activates (k, n) when bit k*N + n is set.
class AlphaEnumeration {
public:
    AlphaEnumeration(std::size_t ap_count, std::size_t device_count, std::vector<double> values);

    std::size_t ap_count() const { return ap_count_; }
    std::size_t device_count() const { return device_count_; }
    std::size_t size() const { return values_.size(); }

    double value(std::uint32_t mask) const { return values_.at(mask); }
    double all_ones() const { return values_.back(); }
    double best() const;
    std::uint32_t all_ones_mask() const { return static_cast<std::uint32_t>(values_.size() - 1); }

private:
    std::size_t ap_count_;
    std::size_t device_count_;
    std::vector<double> values_;
};

inline constexpr std::size_t kMaxEnumeratedPairs = 16;

// For each configuration, AP k with at least one active pair places its
// dominant-eigenvector beam on its first active pair; the resulting allocation
// (with inactive pairs masked) is scored by objective_value. Throws
// CapacityError when K*N exceeds kMaxEnumeratedPairs.
AlphaEnumeration oracle_alpha_enumeration(const Topology& topology,
                                          const ChannelRealization& realization,
                                          const EigenOptions& options = {});

} // namespace wpt
