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

#include "wpt/errors.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace wpt::tools {

inline std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find(sep, start);
        const auto piece = text.substr(start, end == std::string_view::npos ? end : end - start);
        const auto first = piece.find_first_not_of(" \t");
        const auto last = piece.find_last_not_of(" \t");
        out.emplace_back(first == std::string_view::npos ? std::string_view{}
                                                         : piece.substr(first, last - first + 1));
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    return out;
}

// "10,12,...,20" -> 10 12 14 16 18 20. The ellipsis continues the step of the
// two preceding values up to (and including) the value that follows it.
inline std::vector<double> parse_number_list(std::string_view text)
{
    const auto tokens = split(text, ',');
    std::vector<double> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto& tok = tokens[i];
        if (tok == "...") {
            if (out.size() < 2 || i + 1 >= tokens.size())
                throw InvalidArgument("'...' needs two values before it and one after it");
            const double step = out[out.size() - 1] - out[out.size() - 2];
            double stop = 0.0;
            const auto& next = tokens[i + 1];
            auto [p, ec] = std::from_chars(next.data(), next.data() + next.size(), stop);
            if (ec != std::errc{} || p != next.data() + next.size())
                throw InvalidArgument("bad number '" + next + "'");
            if (!(step > 0.0) || stop < out.back())
                throw InvalidArgument("'...' needs an increasing progression");
            const double first = out.back();
            for (int j = 1;; ++j) {
                const double v = first + j * step;
                if (v >= stop - 1e-9 * std::max(1.0, std::abs(stop)))
                    break;
                out.push_back(v);
            }
            continue;
        }
        double v = 0.0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
            throw InvalidArgument("bad number '" + tok + "' in list '" + std::string(text) + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw InvalidArgument("empty number list");
    return out;
}

} // namespace wpt::tools
