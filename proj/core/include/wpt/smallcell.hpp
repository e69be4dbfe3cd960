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

#include <string>
#include <string_view>
#include <vector>

namespace wpt {

// How small-cell devices account for harvested power.
enum class HarvestMode {
    physical, // every AP's beam reaches every device (RF superposition)
    own_cell, // only the serving AP's beam counts
};

// "physical" / "own-cell"; anything else throws InvalidArgument.
HarvestMode parse_harvest_mode(std::string_view text);
std::string_view to_string(HarvestMode mode);

struct CellAssignment {
    std::vector<std::size_t> serving_ap; // AP index per device index
    HarvestMode mode = HarvestMode::physical;

    // Device indices served by AP index k, ascending.
    std::vector<std::size_t> cell(std::size_t k) const;
};

// Nearest AP by Euclidean distance; ties go to the lowest AP id.
CellAssignment assign_cells(const Topology& topology, HarvestMode mode = HarvestMode::physical);

// Each AP beams along the dominant eigenvector of its own cell's Gram matrix
// at full power. Empty cells transmit nothing and have no target.
BeamAllocation solve_smallcell(const Topology& topology, const ChannelRealization& realization,
                               const CellAssignment& assignment, const EigenOptions& options = {});

// Incident power at device n (watts) under the assignment's harvest mode.
double smallcell_incident_power_w(const BeamAllocation& allocation,
                                  const ChannelRealization& realization,
                                  const CellAssignment& assignment, std::size_t n);

// Total harvested power (watts) under the assignment's harvest mode.
double smallcell_eh(const BeamAllocation& allocation, const ChannelRealization& realization,
                    std::span<const Device> devices, const CellAssignment& assignment);

} // namespace wpt
