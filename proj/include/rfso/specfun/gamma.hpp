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

#include <complex>

namespace rfso::specfun {

/// |Γ(x)| in log form together with the sign of Γ(x).
/// At the poles x ∈ {0, -1, -2, ...} the log magnitude is +inf and sign is 0.
struct SignedLogGamma {
    double log_abs;
    int sign;
};

SignedLogGamma log_gamma_signed(double x);

/// 1/Γ(x); exactly 0 at the non-positive integers.
double reciprocal_gamma(double x);

/// Principal-branch-agnostic log Γ(z) for complex z (only exp() of the result
/// is meaningful to callers). Lanczos approximation with reflection.
std::complex<double> log_gamma(std::complex<double> z);

/// ψ^{(order)}(x), the polygamma function.
double polygamma(int order, double x);

/// True when x lies within tol of a non-positive integer.
bool is_nonpositive_integer(double x, double tol);

} // namespace rfso::specfun
