// SPDX-License-Identifier: Apache-2.0
//
// rfso: performance analysis of mixed RF/FSO fixed-gain dual-hop relay links
// Copyright (C) 2026 The rfso authors
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

namespace rfso {

// Thrown when inputs violate a documented precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a series or quadrature fails to converge. Carries whatever
// partial result was accumulated so callers can inspect it.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double partial, std::size_t terms)
        : std::runtime_error(what), partial_(partial), terms_(terms) {}

    double partial() const noexcept { return partial_; }
    std::size_t terms() const noexcept { return terms_; }

private:
    double partial_;
    std::size_t terms_;
};

inline void require(bool cond, const std::string& msg)
{
    if (!cond) throw InvalidInput(msg);
}

} // namespace rfso
