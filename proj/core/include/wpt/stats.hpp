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

#include <span>

namespace wpt {

struct SampleSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;   // sample (n - 1) standard deviation
    double std_error = 0.0;
};

SampleSummary summarize(std::span<const double> values);

// One-sided paired t-test of H1: mean(a - b) > 0.
struct PairedTestResult {
    std::size_t count = 0;
    double mean_difference = 0.0;
    double std_error = 0.0;
    double t_statistic = 0.0;
    double p_value = 1.0;
    double critical_t = 0.0; // upper (1 - alpha) quantile of Student's t
    bool reject_null = false;
};

// Throws InvalidArgument on length mismatch or fewer than two pairs.
PairedTestResult paired_one_sided_t_test(std::span<const double> a, std::span<const double> b,
                                         double alpha = 0.05);

} // namespace wpt
