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

// Brute-force reference computations on plain std::complex arrays. They do not
// touch Eigen expressions or the library's evaluation routines.

#include "wpt/channel.hpp"
#include "wpt/optimizer.hpp"
#include "wpt/topology.hpp"

#include <complex>
#include <random>
#include <vector>

namespace wpt::oracle {

using cvec = std::vector<std::complex<double>>;
using cmat = std::vector<cvec>;

inline cvec to_std(const Eigen::VectorXcd& v)
{
    return cvec(v.data(), v.data() + v.size());
}

// Sum_n w_n h_n h_n^H entry by entry.
inline cmat gram_by_hand(const std::vector<cvec>& channels, const std::vector<double>& weights)
{
    const std::size_t m = channels.front().size();
    cmat g(m, cvec(m, 0.0));
    for (std::size_t n = 0; n < channels.size(); ++n)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                g[i][j] += weights[n] * channels[n][i] * std::conj(channels[n][j]);
    return g;
}

// |w^T h|^2 as an explicit loop.
inline double transpose_power(const cvec& w, const cvec& h)
{
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        acc += w[i] * h[i];
    return std::norm(acc);
}

// Literal triple loop of the harvest objective: sum_n xi_n sum_k sum_n' |alpha w^T h|^2.
inline double objective_by_hand(const BeamAllocation& alloc, const ChannelRealization& real,
                                const std::vector<Device>& devices)
{
    double total = 0.0;
    for (std::size_t n = 0; n < devices.size(); ++n) {
        double dev = 0.0;
        for (std::size_t k = 0; k < alloc.ap_count(); ++k)
            for (std::size_t np = 0; np < alloc.device_count(); ++np)
                if (alloc.selected(k, np))
                    dev += transpose_power(to_std(alloc.beam(k, np)), to_std(real.at(k, n)));
        total += devices[n].conversion_efficiency * dev;
    }
    return total;
}

// Per-device incident power by hand (watts).
inline std::vector<double> incident_by_hand(const BeamAllocation& alloc,
                                            const ChannelRealization& real)
{
    std::vector<double> out(alloc.device_count(), 0.0);
    for (std::size_t n = 0; n < alloc.device_count(); ++n)
        for (std::size_t k = 0; k < alloc.ap_count(); ++k)
            for (std::size_t np = 0; np < alloc.device_count(); ++np)
                if (alloc.selected(k, np))
                    out[n] += transpose_power(to_std(alloc.beam(k, np)), to_std(real.at(k, n)));
    return out;
}

inline Eigen::VectorXcd random_cvec(int m, std::mt19937_64& rng, double scale = 1.0)
{
    std::normal_distribution<double> nd(0.0, scale);
    Eigen::VectorXcd v(m);
    for (int i = 0; i < m; ++i)
        v[i] = {nd(rng), nd(rng)};
    return v;
}

// Random Hermitian PSD B B^H with B of size m x r.
inline Eigen::MatrixXcd random_psd(int m, int r, std::mt19937_64& rng)
{
    Eigen::MatrixXcd b(m, r);
    for (int j = 0; j < r; ++j)
        b.col(j) = random_cvec(m, rng);
    return b * b.adjoint();
}

inline cmat to_std(const Eigen::MatrixXcd& a)
{
    cmat out(a.rows(), cvec(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out[i][j] = a(i, j);
    return out;
}

} // namespace wpt::oracle
