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

#include "wpt/stats.hpp"

#include "wpt/errors.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace wpt {

SampleSummary summarize(std::span<const double> values)
{
    SampleSummary s;
    s.count = values.size();
    if (values.empty())
        return s;
    double sum = 0.0;
    for (double v : values)
        sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values)
            ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
        s.std_error = s.stddev / std::sqrt(static_cast<double>(values.size()));
    }
    return s;
}

PairedTestResult paired_one_sided_t_test(std::span<const double> a, std::span<const double> b,
                                         double alpha)
{
    if (a.size() != b.size())
        throw InvalidArgument("paired test needs samples of equal length");
    if (a.size() < 2)
        throw InvalidArgument("paired test needs at least two pairs");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidArgument("significance level must lie in (0, 1)");

    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        diff[i] = a[i] - b[i];
    const auto s = summarize(diff);

    PairedTestResult r;
    r.count = s.count;
    r.mean_difference = s.mean;
    r.std_error = s.std_error;
    const boost::math::students_t dist(static_cast<double>(s.count - 1));
    r.critical_t = boost::math::quantile(boost::math::complement(dist, alpha));
    if (s.std_error > 0.0) {
        r.t_statistic = s.mean / s.std_error;
        r.p_value = boost::math::cdf(boost::math::complement(dist, r.t_statistic));
    } else {
        // Constant differences: the sign decides.
        r.t_statistic = s.mean > 0.0   ? std::numeric_limits<double>::infinity()
                        : s.mean < 0.0 ? -std::numeric_limits<double>::infinity()
                                       : 0.0;
        r.p_value = s.mean > 0.0 ? 0.0 : 1.0;
    }
    r.reject_null = r.t_statistic > r.critical_t;
    return r;
}

} // namespace wpt
