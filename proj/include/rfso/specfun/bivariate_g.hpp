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

#include <cstddef>
#include <vector>

namespace rfso::specfun {

/// Extended generalized bivariate Meijer G-function restricted to the block
/// pattern of the relay capacity integral
///
///   (1/(2πi)^2) ∫∫ Γ(outer_top + s + t)
///                 · Γ(middle_bottom - s) Γ(1 - middle_top + s)
///                 · prod Γ(inner_bottom_i - t) / prod Γ(inner_top_l - t)
///                 · x^s y^t  ds dt,
///
/// i.e. outer block G^{1,0}_{1,0}, middle block G^{1,1}_{1,1}, inner block
/// G^{3r+1,0}_{r,3r+1}. Equivalently
///   ∫_0^∞ u^{outer_top-1} e^{-u} G^{1,1}_{1,1}[x u] G^{q,0}_{p,q}[y u] du.
struct BivariateGSpec {
    double outer_top = 1.0;
    double middle_top = 0.0;
    double middle_bottom = 0.0;
    std::vector<double> inner_top;
    std::vector<double> inner_bottom;
    double x = 1.0;
    double y = 1.0;
};

struct BivariateOptions {
    double initial_half_length = 40.0;
    double tail_tol = 1e-8;
    double step_tol = 1e-8;
    /// NaN: midpoint of the admissible strip.
    double abscissa_s;
    double abscissa_t;
    BivariateOptions();
};

struct BivariateResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t nodes = 0;
    double abscissa_s = 0.0;
    double abscissa_t = 0.0;
};

struct BivariateStrips {
    double s_lo, s_hi;   // abscissa range for s
    double t_hi;         // t must stay below this
    double sum_lo;       // s + t must stay above this
};

BivariateStrips bivariate_strips(const BivariateGSpec& spec);

void validate(const BivariateGSpec& spec);

BivariateResult bivariate_g(const BivariateGSpec& spec, const BivariateOptions& opts = {});

} // namespace rfso::specfun
