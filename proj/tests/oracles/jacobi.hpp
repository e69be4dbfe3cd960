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

// Dense cyclic Jacobi diagonalization, used only as a test oracle for the
// power-iteration eigen solver. A Hermitian H = A + iB is embedded in the real
// symmetric [[A, -B], [B, A]], whose spectrum is H's with every eigenvalue
// doubled; an eigenvector [x; y] maps back to x + iy.

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace wpt::oracle {

struct DenseEigen {
    std::vector<double> values;                         // descending
    std::vector<std::vector<std::complex<double>>> vectors; // matching values, unit norm
};

// Real symmetric Jacobi; returns eigenvalues (unsorted) and column eigenvectors.
inline void jacobi_symmetric(std::vector<std::vector<double>>& a,
                             std::vector<std::vector<double>>& v)
{
    const std::size_t n = a.size();
    v.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        v[i][i] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            diag += a[p][p] * a[p][p];
            for (std::size_t q = p + 1; q < n; ++q)
                off += a[p][q] * a[p][q];
        }
        if (off <= 1e-32 * std::max(diag, 1e-300))
            return;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
}

// `h` is row-major m x m Hermitian.
inline DenseEigen hermitian_eigen(const std::vector<std::vector<std::complex<double>>>& h)
{
    const std::size_t m = h.size();
    std::vector<std::vector<double>> a(2 * m, std::vector<double>(2 * m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            a[i][j] = h[i][j].real();
            a[i + m][j + m] = h[i][j].real();
            a[i][j + m] = -h[i][j].imag();
            a[i + m][j] = h[i][j].imag();
        }
    }
    std::vector<std::vector<double>> v;
    jacobi_symmetric(a, v);

    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < 2 * m; ++i)
        order.emplace_back(a[i][i], i);
    std::sort(order.begin(), order.end(), [](auto& x, auto& y) { return x.first > y.first; });

    // Each eigenvalue appears twice; keep every other one.
    DenseEigen out;
    for (std::size_t r = 0; r < 2 * m; r += 2) {
        const auto col = order[r].second;
        std::vector<std::complex<double>> z(m);
        double norm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            z[i] = {v[i][col], v[i + m][col]};
            norm2 += std::norm(z[i]);
        }
        for (auto& c : z)
            c /= std::sqrt(norm2);
        out.values.push_back(order[r].first);
        out.vectors.push_back(std::move(z));
    }
    return out;
}

} // namespace wpt::oracle
