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

#include <Eigen/Core>

#include <span>

namespace wpt {

// Sum_n weight_n h_n h_n^H for one AP. Hermitian positive semidefinite.
struct WeightedGram {
    Eigen::MatrixXcd matrix;
    int ap_id = 0;
};

struct EigenPair {
    double eigenvalue = 0.0;
    Eigen::VectorXcd eigenvector; // unit norm, phase-canonical
    double residual = 0.0;        // ||G v - lambda v||
    int iterations = 0;
};

struct EigenOptions {
    double tol = 1e-12; // residual tolerance on the Frobenius-normalized matrix
    int max_iter = 10000;
};

// Throws InvalidArgument when channel lengths disagree, the weight count differs
// from the channel count, or a weight lies outside [0, 1].
WeightedGram build_gram(std::span<const ChannelVector> channels, std::span<const double> weights,
                        int ap_id = 0);

// Rotates v so that its first component with modulus above 1e-10 is real and
// positive. Returns v unchanged when every component is below that threshold.
void canonicalize_phase(Eigen::VectorXcd& v);

// Dominant eigenpair of a Hermitian PSD matrix by power iteration.
//
// The iterate starts at e_1 plus a small fixed complex perturbation. Each step
// multiplies by the current iteration operator, which is then squared and
// renormalized, so after s steps the iterate has seen G^(2^s - 1): spectral
// ratios decay doubly exponentially and near-degenerate spectra converge in a
// few dozen steps. Convergence is declared when the residual on G/||G||_F drops
// below tol. The zero matrix returns (0, e_1).
//
// Throws ConvergenceError (carrying the last residual) after max_iter steps.
EigenPair largest_eigenpair(const Eigen::MatrixXcd& hermitian, const EigenOptions& options = {});
EigenPair largest_eigenpair(const WeightedGram& gram, const EigenOptions& options = {});

} // namespace wpt
