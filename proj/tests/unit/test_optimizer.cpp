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

#include "oracles/instances.hpp"
#include "oracles/naive.hpp"

#include "wpt/errors.hpp"
#include "wpt/optimizer.hpp"
#include "wpt/scenario.hpp"

#include <cmath>
#include <random>

using Catch::Approx;
using namespace wpt;

using oracle::make_instance;

TEST_CASE("select_target_device - strict argmax and lowest-index ties")
{
    Eigen::VectorXcd a(2), b(2), c(2);
    a << 1.0, 0.0;
    b << 0.0, 2.0;
    c << std::complex<double>(0.0, 2.0), 0.0;
    const std::vector<ChannelVector> abc{a, b, c};
    CHECK(select_target_device(abc) == 1);
    const std::vector<ChannelVector> tie{a, a, a};
    CHECK(select_target_device(tie) == 0);
    CHECK_THROWS_AS(select_target_device(std::span<const ChannelVector>{}), InvalidArgument);
}

TEST_CASE("select_target_device - agrees with a linear scan")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> nd(1, 7);
    for (int t = 0; t < 500; ++t) {
        std::vector<ChannelVector> hs;
        const int n = nd(rng);
        for (int i = 0; i < n; ++i)
            hs.push_back(oracle::random_cvec(3, rng));
        if (t % 5 == 0)
            hs.push_back(hs.front());
        std::size_t ref = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            double s = 0.0;
            for (int j = 0; j < 3; ++j)
                s += std::norm(hs[i][j]);
            if (s > best) {
                best = s;
                ref = i;
            }
        }
        REQUIRE(select_target_device(hs) == ref);
    }
}

TEST_CASE("solve_cellless - single AP, single device is the matched filter")
{
    std::mt19937_64 rng(1);
    auto in = make_instance(1, 4, 1, rng);
    const auto alloc = solve_cellless(in.topology, in.realization);
    const auto& h = in.realization.at(0, 0);
    const double p = in.topology.aps[0].effective_power_w();
    const auto& w = alloc.beam(0, 0);
    // w parallel to conj(h) with full power.
    CHECK(w.squaredNorm() == Approx(p).epsilon(1e-12));
    CHECK(std::abs((w.transpose() * h).value()) ==
          Approx(std::sqrt(p) * h.norm()).epsilon(1e-12));
    const double xi = in.topology.devices[0].conversion_efficiency;
    CHECK(objective_value(alloc, in.realization, in.topology.devices) ==
          Approx(xi * p * h.squaredNorm()).epsilon(1e-12));
}

TEST_CASE("solve_cellless - all-zero channels harvest nothing but stay feasible")
{
    std::mt19937_64 rng(2);
    auto in = make_instance(2, 3, 3, rng);
    std::vector<ChannelVector> zeros(6, Eigen::VectorXcd::Zero(3));
    in.realization = ChannelRealization(2, 3, 0, zeros);
    const auto alloc = solve_cellless(in.topology, in.realization);
    CHECK(objective_value(alloc, in.realization, in.topology.devices) == 0.0);
    CHECK(check_allocation(in.topology, alloc).empty());
}

TEST_CASE("solve_ap - beats 1e5 random unit-norm beams on a 2x3 instance")
{
    std::mt19937_64 rng(77);
    auto in = make_instance(1, 2, 3, rng);
    const auto xi = conversion_efficiencies(in.topology);
    const auto sol = solve_ap(in.topology.aps[0], in.realization.ap_channels(0), xi);
    const double p = in.topology.aps[0].effective_power_w();

    auto score = [&](const Eigen::VectorXcd& w) {
        double s = 0.0;
        for (std::size_t n = 0; n < 3; ++n)
            s += xi[n] * oracle::transpose_power(oracle::to_std(w),
                                                 oracle::to_std(in.realization.at(0, n)));
        return s;
    };
    const double closed = score(sol.beamformer);
    double best = 0.0;
    for (int i = 0; i < 100000; ++i) {
        Eigen::VectorXcd w = oracle::random_cvec(2, rng);
        w *= std::sqrt(p) / w.norm();
        best = std::max(best, score(w));
    }
    CHECK(best <= closed * (1.0 + 1e-12));
    CHECK(closed - best <= 1e-3 * closed);
    CHECK(closed == Approx(p * sol.eigen.eigenvalue).epsilon(1e-12));
}

TEST_CASE("solve_cellless - default scenario uses one beam per AP")
{
    const auto topo = load_scenario(WPT_DEFAULT_SCENARIO);
    for (std::uint64_t seed : {1u, 2u, 3u, 42u}) {
        const auto real = generate_realization(topo, seed);
        const auto alloc = solve_cellless(topo, real);
        int ones = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            int row = 0;
            for (std::size_t n = 0; n < 5; ++n)
                row += alloc.selected(k, n) ? 1 : 0;
            CHECK(row == 1);
            ones += row;
            REQUIRE(alloc.target(k).has_value());
            CHECK(alloc.selected(k, *alloc.target(k)));
            CHECK(*alloc.target(k) == select_target_device(real.ap_channels(k)));
        }
        CHECK(ones == 3);
        CHECK(check_allocation(topo, alloc).empty());
    }
}

TEST_CASE("solve_cellless - properties over random instances")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> kd(1, 3), md(1, 6), nd(1, 5);
    std::uniform_real_distribution<double> pd(5.0, 25.0);
    for (int t = 0; t < 200; ++t) {
        const auto k_aps = static_cast<std::size_t>(kd(rng));
        const int m = md(rng);
        const auto n_dev = static_cast<std::size_t>(nd(rng));
        auto in = make_instance(k_aps, m, n_dev, rng, pd(rng));
        const auto& devs = in.topology.devices;
        const auto xi = conversion_efficiencies(in.topology);
        const auto alloc = solve_cellless(in.topology, in.realization);

        // Feasible.
        REQUIRE(check_allocation(in.topology, alloc).empty());

        // Objective equals the literal triple loop.
        const double obj = objective_value(alloc, in.realization, devs);
        REQUIRE(std::abs(obj - oracle::objective_by_hand(alloc, in.realization, devs)) <=
                1e-12 * std::max(1.0, obj));

        // Decomposition: total equals the sum of per-AP P_k * lambda_k.
        double decomposed = 0.0;
        for (std::size_t k = 0; k < k_aps; ++k) {
            const auto sol = solve_ap(in.topology.aps[k], in.realization.ap_channels(k), xi);
            REQUIRE(sol.eigen.eigenvalue + 1e-15 >= 0.0);
            decomposed += in.topology.aps[k].effective_power_w() * sol.eigen.eigenvalue;
            // lambda_max >= max_n xi_n ||h_n||^2.
            for (std::size_t n = 0; n < n_dev; ++n)
                REQUIRE(sol.eigen.eigenvalue >=
                        xi[n] * in.realization.at(k, n).squaredNorm() * (1.0 - 1e-12));
        }
        REQUIRE(std::abs(obj - decomposed) <= 1e-12 * std::max(1.0, obj));

        // Doubling every AP's power doubles the objective.
        auto doubled = in.topology;
        for (auto& ap : doubled.aps) {
            ap.power_budget_dbm += 10.0 * std::log10(2.0);
            ap.power_restriction_dbm += 10.0 * std::log10(2.0);
        }
        const double obj2 = objective_value(solve_cellless(doubled, in.realization),
                                            in.realization, doubled.devices);
        REQUIRE(obj2 == Approx(2.0 * obj).epsilon(1e-10));
    }
}

TEST_CASE("incident_power_w - agrees with the hand loop")
{
    std::mt19937_64 rng(5);
    auto in = make_instance(3, 3, 4, rng);
    auto alloc = BeamAllocation::zeros(in.topology);
    alloc.set_beam(0, 1, oracle::random_cvec(3, rng, 0.05));
    alloc.set_beam(0, 3, oracle::random_cvec(3, rng, 0.05));
    alloc.set_beam(2, 0, oracle::random_cvec(3, rng, 0.05));
    const auto ref = oracle::incident_by_hand(alloc, in.realization);
    for (std::size_t n = 0; n < 4; ++n)
        CHECK(incident_power_w(alloc, in.realization, n) == Approx(ref[n]).epsilon(1e-13));
}

TEST_CASE("BeamAllocation - selection follows beam power")
{
    const std::vector<int> counts{2, 3};
    BeamAllocation a(counts, 2);
    CHECK_FALSE(a.selected(0, 0));
    CHECK(a.total_transmit_power_w() == 0.0);
    Eigen::VectorXcd w(2);
    w << 0.1, 0.2;
    a.set_beam(0, 1, w);
    CHECK(a.selected(0, 1));
    CHECK(a.transmit_power_w(0) == Approx(0.05));
    a.set_beam(0, 1, Eigen::VectorXcd::Zero(2));
    CHECK_FALSE(a.selected(0, 1));
    CHECK_THROWS_AS(a.set_beam(1, 0, w), InvalidArgument);
    const std::vector<int> bad{2, 0};
    CHECK_THROWS_AS(BeamAllocation(bad, 2), InvalidArgument);
}

TEST_CASE("check_allocation - reports each violated invariant")
{
    std::mt19937_64 rng(6);
    auto in = make_instance(1, 2, 2, rng);
    const double p = in.topology.aps[0].effective_power_w();
    auto alloc = BeamAllocation::zeros(in.topology);
    Eigen::VectorXcd w(2);
    w << std::sqrt(p), 0.0;

    alloc.set_beam(0, 0, w);
    CHECK(check_allocation(in.topology, alloc).empty());

    auto over = alloc;
    over.set_beam(0, 0, 1.01 * w);
    CHECK(check_allocation(in.topology, over).size() == 1);

    auto two = alloc;
    two.set_beam(0, 1, 0.1 * w);
    two.set_beam(0, 0, 0.9 * w);
    const auto issues = check_allocation(in.topology, two);
    REQUIRE(issues.size() == 1);
    CHECK_THAT(issues[0], Catch::Matchers::ContainsSubstring("2 beams"));

    auto flag = alloc;
    flag.set_selected(0, 1, true);
    CHECK(check_allocation(in.topology, flag).size() == 1);
}
