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

#include <catch_amalgamated.hpp>

#include "oracles/jacobi.hpp"
#include "oracles/naive.hpp"

#include "wpt/eigen_solver.hpp"
#include "wpt/errors.hpp"

#include <Eigen/QR>

#include <cmath>
#include <random>

using Catch::Approx;
using namespace wpt;
using std::complex;

namespace {

void require_eigen_invariants(const Eigen::MatrixXcd& g, const EigenPair& p)
{
    REQUIRE(p.eigenvector.norm() == Approx(1.0).margin(1e-12));
    REQUIRE((g * p.eigenvector - p.eigenvalue * p.eigenvector).norm() <=
            1e-10 * std::max(1.0, p.eigenvalue));
    // Phase canonical: first component above the threshold is real positive.
    for (Eigen::Index i = 0; i < p.eigenvector.size(); ++i) {
        if (std::abs(p.eigenvector[i]) > 1e-10) {
            REQUIRE(p.eigenvector[i].imag() == 0.0);
            REQUIRE(p.eigenvector[i].real() > 0.0);
            break;
        }
    }
}

} // namespace

TEST_CASE("build_gram - rank-one outer product")
{
    Eigen::VectorXcd h(2);
    h << 1.0, complex<double>(0.0, 1.0);
    const std::vector<ChannelVector> chans{h};
    const std::vector<double> w{1.0};
    const auto g = build_gram(chans, w).matrix;
    CHECK(g(0, 0) == complex<double>(1.0, 0.0));
    CHECK(g(0, 1) == complex<double>(0.0, -1.0));
    CHECK(g(1, 0) == complex<double>(0.0, 1.0));
    CHECK(g(1, 1) == complex<double>(1.0, 0.0));
}

TEST_CASE("build_gram - zero weights annihilate")
{
    std::mt19937_64 rng(3);
    const std::vector<ChannelVector> chans{oracle::random_cvec(3, rng), oracle::random_cvec(3, rng)};
    const std::vector<double> w{0.0, 0.0};
    CHECK(build_gram(chans, w).matrix.isZero(0.0));
}

TEST_CASE("build_gram - matches entrywise brute-force summation")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ChannelVector> chans;
        std::vector<oracle::cvec> raw;
        std::vector<double> w;
        for (int n = 0; n < 3; ++n) {
            chans.push_back(oracle::random_cvec(2, rng));
            raw.push_back(oracle::to_std(chans.back()));
            w.push_back(u(rng));
        }
        const auto g = build_gram(chans, w).matrix;
        const auto ref = oracle::gram_by_hand(raw, w);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                REQUIRE(std::abs(g(i, j) - ref[i][j]) <= 1e-14 * (1.0 + std::abs(ref[i][j])));
        // Hermitian PSD
        REQUIRE((g - g.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        for (int s = 0; s < 5; ++s) {
            const auto x = oracle::random_cvec(2, rng);
            REQUIRE(x.dot(g * x).real() >= -1e-12);
        }
    }
}

TEST_CASE("build_gram - argument errors")
{
    std::mt19937_64 rng(3);
    const std::vector<ChannelVector> mixed{oracle::random_cvec(2, rng), oracle::random_cvec(3, rng)};
    const std::vector<double> w2{0.5, 0.5}, w1{0.5}, bad{0.5, 1.5};
    CHECK_THROWS_AS(build_gram(mixed, w2), InvalidArgument);
    const std::vector<ChannelVector> same{oracle::random_cvec(2, rng), oracle::random_cvec(2, rng)};
    CHECK_THROWS_AS(build_gram(same, w1), InvalidArgument);
    CHECK_THROWS_AS(build_gram(same, bad), InvalidArgument);
}

TEST_CASE("largest_eigenpair - zero matrix falls back to e1")
{
    const auto p = largest_eigenpair(Eigen::MatrixXcd::Zero(3, 3));
    CHECK(p.eigenvalue == 0.0);
    CHECK(p.eigenvector == Eigen::VectorXcd::Unit(3, 0));
}

TEST_CASE("largest_eigenpair - rank one spectrum")
{
    std::mt19937_64 rng(23);
    for (int m = 1; m <= 8; ++m) {
        const auto h = oracle::random_cvec(m, rng);
        const Eigen::MatrixXcd g = h * h.adjoint();
        const auto p = largest_eigenpair(g);
        require_eigen_invariants(g, p);
        CHECK(p.eigenvalue == Approx(h.squaredNorm()).epsilon(1e-12));
        CHECK(std::abs(p.eigenvector.dot(h.normalized())) == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("largest_eigenpair - agrees with dense Jacobi diagonalization")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 1 + trial % 8;
        const int r = 1 + (trial / 8) % m;
        const auto g = oracle::random_psd(m, r, rng);
        const auto p = largest_eigenpair(g);
        require_eigen_invariants(g, p);
        const auto ref = oracle::hermitian_eigen(oracle::to_std(g));
        REQUIRE(std::abs(p.eigenvalue - ref.values[0]) <= 1e-9 * std::max(1.0, ref.values[0]));
        const double gap = m > 1 ? ref.values[0] - ref.values[1] : ref.values[0];
        if (gap > 1e-6 * ref.values[0]) {
            complex<double> ip = 0.0;
            for (int i = 0; i < m; ++i)
                ip += std::conj(ref.vectors[0][i]) * p.eigenvector[i];
            REQUIRE(std::abs(ip) == Approx(1.0).margin(1e-9));
        }
    }
}

TEST_CASE("largest_eigenpair - degenerate and near-degenerate spectra")
{
    SECTION("identity")
    {
        const auto p = largest_eigenpair(Eigen::MatrixXcd::Identity(4, 4));
        CHECK(p.eigenvalue == Approx(1.0).epsilon(1e-14));
        require_eigen_invariants(Eigen::MatrixXcd::Identity(4, 4), p);
    }
    SECTION("diagonal with dominant entry last")
    {
        Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
        d(0, 0) = 0.0;
        d(1, 1) = 1.0;
        d(2, 2) = 2.0;
        const auto p = largest_eigenpair(d);
        CHECK(p.eigenvalue == Approx(2.0).epsilon(1e-14));
        CHECK(std::abs(p.eigenvector[2]) == Approx(1.0).epsilon(1e-12));
    }
    SECTION("relative gap 1e-9")
    {
        std::mt19937_64 rng(5);
        Eigen::MatrixXcd q = oracle::random_psd(5, 5, rng);
        // Unitary from a QR factorization.
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(q);
        const Eigen::MatrixXcd u = qr.householderQ();
        Eigen::VectorXd lam(5);
        lam << 1.0, 1.0 - 1e-9, 0.5, 0.2, 0.0;
        const Eigen::MatrixXcd g = u * lam.cast<complex<double>>().asDiagonal() * u.adjoint();
        const auto p = largest_eigenpair(g);
        require_eigen_invariants(g, p);
        CHECK(p.eigenvalue == Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("largest_eigenpair - scale covariance")
{
    std::mt19937_64 rng(8);
    const auto g = oracle::random_psd(4, 3, rng);
    const auto a = largest_eigenpair(g);
    for (double c : {1e-12, 1e-3, 7.0, 1e9}) {
        const auto b = largest_eigenpair(Eigen::MatrixXcd(c * g));
        CHECK(b.eigenvalue == Approx(c * a.eigenvalue).epsilon(1e-12));
        CHECK((b.eigenvector - a.eigenvector).norm() <= 1e-9);
    }
}

TEST_CASE("largest_eigenpair - non-convergence carries the residual")
{
    std::mt19937_64 rng(2);
    const auto g = oracle::random_psd(6, 6, rng);
    try {
        largest_eigenpair(g, {1e-12, 1});
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.last_residual() > 0.0);
        CHECK(e.iterations() == 1);
    }
    CHECK_THROWS_AS(largest_eigenpair(g, {0.0, 10}), InvalidArgument);
    CHECK_THROWS_AS(largest_eigenpair(Eigen::MatrixXcd(2, 3)), InvalidArgument);
}

TEST_CASE("largest_eigenpair - deterministic")
{
    std::mt19937_64 rng(4);
    const auto g = oracle::random_psd(5, 2, rng);
    const auto a = largest_eigenpair(g);
    const auto b = largest_eigenpair(g);
    CHECK(a.eigenvalue == b.eigenvalue);
    CHECK(a.eigenvector == b.eigenvector);
}
