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
#include "wpt/eigen_solver.hpp"
#include "wpt/optimizer.hpp"
#include "wpt/scenario.hpp"
#include "wpt/smallcell.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

Eigen::MatrixXcd random_psd(int m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    Eigen::MatrixXcd b(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            b(i, j) = {nd(rng), nd(rng)};
    return b * b.adjoint();
}

void BM_LargestEigenpair(benchmark::State& state)
{
    const auto g = random_psd(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(wpt::largest_eigenpair(g));
}
BENCHMARK(BM_LargestEigenpair)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_GenerateRealization(benchmark::State& state)
{
    const auto topo = wpt::load_scenario(WPT_DEFAULT_SCENARIO);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(wpt::generate_realization(topo, seed++));
}
BENCHMARK(BM_GenerateRealization);

void BM_SolveCellless(benchmark::State& state)
{
    const auto topo = wpt::load_scenario(WPT_DEFAULT_SCENARIO);
    const auto real = wpt::generate_realization(topo, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(wpt::solve_cellless(topo, real));
}
BENCHMARK(BM_SolveCellless);

void BM_SolveSmallcell(benchmark::State& state)
{
    const auto topo = wpt::load_scenario(WPT_DEFAULT_SCENARIO);
    const auto real = wpt::generate_realization(topo, 42);
    const auto cells = wpt::assign_cells(topo);
    for (auto _ : state)
        benchmark::DoNotOptimize(wpt::solve_smallcell(topo, real, cells));
}
BENCHMARK(BM_SolveSmallcell);

} // namespace

BENCHMARK_MAIN();
