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

#include "wpt/eigen_solver.hpp"

#include "wpt/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace wpt {

namespace {

// Beyond this many squarings every ratio below one has underflowed.
constexpr int kMaxSquarings = 64;

Eigen::VectorXcd start_vector(Eigen::Index m)
{
    Eigen::VectorXcd x(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double j = static_cast<double>(i);
        x[i] = 1e-3 * std::complex<double>(1.0 / (j + 1.0), 0.5 / (j + 2.0));
    }
    x[0] += 1.0;
    return x.normalized();
}

} // namespace

WeightedGram build_gram(std::span<const ChannelVector> channels, std::span<const double> weights,
                        int ap_id)
{
    if (channels.empty())
        throw InvalidArgument("build_gram needs at least one channel");
    if (channels.size() != weights.size())
        throw InvalidArgument("build_gram: " + std::to_string(channels.size()) +
                              " channels but " + std::to_string(weights.size()) + " weights");
    const auto m = channels.front().size();
    WeightedGram gram{Eigen::MatrixXcd::Zero(m, m), ap_id};
    for (std::size_t n = 0; n < channels.size(); ++n) {
        if (channels[n].size() != m)
            throw InvalidArgument("build_gram: channel vectors differ in length");
        if (!(weights[n] >= 0.0 && weights[n] <= 1.0))
            throw InvalidArgument("build_gram: weights must lie in [0, 1]");
        if (weights[n] == 0.0)
            continue;
        gram.matrix.noalias() += weights[n] * (channels[n] * channels[n].adjoint());
    }
    return gram;
}

void canonicalize_phase(Eigen::VectorXcd& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        if (mag > 1e-10) {
            v *= std::conj(v[i]) / mag;
            v[i] = std::complex<double>(std::abs(v[i]), 0.0);
            return;
        }
    }
}

EigenPair largest_eigenpair(const Eigen::MatrixXcd& g, const EigenOptions& options)
{
    if (g.rows() != g.cols() || g.rows() == 0)
        throw InvalidArgument("largest_eigenpair needs a non-empty square matrix");
    if (!(options.tol > 0.0))
        throw InvalidArgument("largest_eigenpair: tol must be positive");
    if (options.max_iter < 1)
        throw InvalidArgument("largest_eigenpair: max_iter must be at least 1");

    const auto m = g.rows();
    EigenPair out;
    const double scale = g.norm();
    if (!std::isfinite(scale))
        throw InvalidArgument("largest_eigenpair: matrix has non-finite entries");
    if (scale == 0.0) {
        out.eigenvector = Eigen::VectorXcd::Unit(m, 0);
        return out;
    }

    const Eigen::MatrixXcd s = g / scale;
    Eigen::MatrixXcd op = s;
    Eigen::VectorXcd x = start_vector(m);
    double residual = std::numeric_limits<double>::infinity();
    int squarings = 0;

    for (int it = 1; it <= options.max_iter; ++it) {
        Eigen::VectorXcd y = op * x;
        double norm = y.norm();
        if (!(norm > 1e-300)) {
            // x fell into the null space of the operator; restart from its widest column.
            Eigen::Index col = 0;
            op.colwise().norm().maxCoeff(&col);
            y = op.col(col);
            norm = y.norm();
        }
        x = y / norm;

        const Eigen::VectorXcd sx = s * x;
        const double mu = x.dot(sx).real();
        residual = (sx - mu * x).norm();
        out.iterations = it;
        if (residual <= options.tol)
            break;
        if (it == options.max_iter) {
            throw ConvergenceError("power iteration did not converge in " +
                                       std::to_string(options.max_iter) +
                                       " iterations (residual " + std::to_string(residual) + ")",
                                   residual * scale, it);
        }
        if (squarings < kMaxSquarings) {
            Eigen::MatrixXcd sq = op * op;
            op = 0.5 * (sq + sq.adjoint());
            op /= op.cwiseAbs().maxCoeff();
            ++squarings;
        }
    }

    x.normalize();
    canonicalize_phase(x);
    const Eigen::VectorXcd gx = g * x;
    out.eigenvalue = x.dot(gx).real();
    out.residual = (gx - out.eigenvalue * x).norm();
    out.eigenvector = std::move(x);
    return out;
}

EigenPair largest_eigenpair(const WeightedGram& gram, const EigenOptions& options)
{
    return largest_eigenpair(gram.matrix, options);
}

} // namespace wpt
