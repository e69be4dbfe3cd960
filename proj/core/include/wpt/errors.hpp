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

#include <stdexcept>
#include <string>

namespace wpt {

// Precondition violations on public entry points.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Power iteration did not reach the residual tolerance within the iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_residual, int iterations)
        : std::runtime_error(what), last_residual_(last_residual), iterations_(iterations)
    {
    }
    double last_residual() const noexcept { return last_residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double last_residual_;
    int iterations_;
};

// Instance too large for exhaustive enumeration.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Ratio with a zero denominator (e.g. efficiency with no transmit power).
class UndefinedRatioError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Scenario file problems. `key()` names the offending JSON path, when known.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(const std::string& what, std::string key = {})
        : std::runtime_error(what), key_(std::move(key))
    {
    }
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

} // namespace wpt
