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

#include "rfso/specfun/bivariate_g.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "rfso/error.hpp"
#include "rfso/specfun/gamma.hpp"

namespace rfso::specfun {

namespace {

using cplx = std::complex<double>;

struct Level {
    double value;
    double tail;
    std::size_t nodes;
};

// Trapezoid on the square [-L, L]^2 with step h. The outer gamma depends on
// s + t only, so it is tabulated on the 1-D lattice of index sums.
Level trapezoid(const BivariateGSpec& sp, double cs, double ct, double h, double half_len)
{
    const auto n = static_cast<long>(std::ceil(half_len / h));
    const std::size_t w = static_cast<std::size_t>(2 * n + 1);
    const double lx = std::log(sp.x);
    const double ly = std::log(sp.y);

    std::vector<cplx> ps(w), qt(w), rs(2 * w - 1);
    double pmax = 0.0, qmax = 0.0;
    for (long i = -n; i <= n; ++i) {
        const cplx s(cs, h * static_cast<double>(i));
        const cplx lp = log_gamma(sp.middle_bottom - s) + log_gamma(1.0 - sp.middle_top + s) + s * lx;
        const cplx vp = std::exp(lp);
        ps[static_cast<std::size_t>(i + n)] = vp;
        pmax = std::max(pmax, std::abs(vp));

        const cplx t(ct, h * static_cast<double>(i));
        cplx lq = t * ly;
        for (double b : sp.inner_bottom) lq += log_gamma(b - t);
        for (double a : sp.inner_top) lq -= log_gamma(a - t);
        const cplx vq = std::exp(lq);
        qt[static_cast<std::size_t>(i + n)] = vq;
        qmax = std::max(qmax, std::abs(vq));
    }
    for (long k = -2 * n; k <= 2 * n; ++k)
        rs[static_cast<std::size_t>(k + 2 * n)] =
            std::exp(log_gamma(cplx(sp.outer_top + cs + ct, h * static_cast<double>(k))));

    // Rows/columns far below the peak cannot contribute at double precision.
    auto trim = [&](const std::vector<cplx>& v, double mx) {
        std::size_t lo = 0, hi = w;
        while (lo + 1 < hi && std::abs(v[lo]) < 1e-24 * mx) ++lo;
        while (hi - 1 > lo && std::abs(v[hi - 1]) < 1e-24 * mx) --hi;
        return std::pair<std::size_t, std::size_t>{lo, hi};
    };
    const auto [i0, i1] = trim(ps, pmax);
    const auto [j0, j1] = trim(qt, qmax);

    cplx total = 0.0;
    double tail = 0.0;
    std::size_t nodes = 0;
    for (std::size_t i = i0; i < i1; ++i) {
        cplx row = 0.0;
        for (std::size_t j = j0; j < j1; ++j) row += qt[j] * rs[i + j];
        total += ps[i] * row;
        nodes += j1 - j0;
    }
    // Magnitude carried by the outermost ring.
    for (std::size_t i = 0; i < w; ++i) {
        tail += std::abs(ps[i] * qt[0] * rs[i]) + std::abs(ps[i] * qt[w - 1] * rs[i + w - 1]);
        tail += std::abs(ps[0] * qt[i] * rs[i]) + std::abs(ps[w - 1] * qt[i] * rs[i + w - 1]);
    }
    const double scale = h * h / (4.0 * std::numbers::pi * std::numbers::pi);
    return {scale * total.real(), scale * tail, nodes};
}

} // namespace

BivariateOptions::BivariateOptions()
    : abscissa_s(std::numeric_limits<double>::quiet_NaN()),
      abscissa_t(std::numeric_limits<double>::quiet_NaN())
{
}

BivariateStrips bivariate_strips(const BivariateGSpec& spec)
{
    BivariateStrips st{};
    st.t_hi = *std::min_element(spec.inner_bottom.begin(), spec.inner_bottom.end());
    st.sum_lo = -spec.outer_top;
    st.s_lo = std::max(spec.middle_top - 1.0, st.sum_lo - st.t_hi);
    st.s_hi = spec.middle_bottom;
    return st;
}

void validate(const BivariateGSpec& spec)
{
    require(spec.inner_bottom.size() == 3 * spec.inner_top.size() + 1,
            "bivariate G: inner block must be G^{3r+1,0}_{r,3r+1}");
    require(std::isfinite(spec.x) && spec.x > 0.0, "bivariate G: x must be positive");
    require(std::isfinite(spec.y) && spec.y > 0.0, "bivariate G: y must be positive");
    const double d = spec.middle_top - spec.middle_bottom;
    require(!(d >= 1.0 && d == std::floor(d)), "bivariate G: middle block is undefined");
}

BivariateResult bivariate_g(const BivariateGSpec& spec, const BivariateOptions& opts)
{
    validate(spec);
    const BivariateStrips st = bivariate_strips(spec);
    require(st.s_lo < st.s_hi, "bivariate G: no admissible contour (pole families overlap)");

    double cs = opts.abscissa_s;
    if (std::isnan(cs)) cs = 0.5 * (st.s_lo + st.s_hi);
    require(cs > st.s_lo && cs < st.s_hi, "bivariate G: s-abscissa outside admissible strip");
    const double t_lo = st.sum_lo - cs;
    double ct = opts.abscissa_t;
    if (std::isnan(ct)) ct = 0.5 * (t_lo + st.t_hi);
    require(ct > t_lo && ct < st.t_hi, "bivariate G: t-abscissa outside admissible strip");

    // Nearest singularity distance bounds the trapezoid step.
    const double dist = std::min({cs - st.s_lo, st.s_hi - cs, ct - t_lo, st.t_hi - ct,
                                  cs - (spec.middle_top - 1.0)});
    double half_len = opts.initial_half_length;
    double h = std::min(0.25, dist);

    Level prev = trapezoid(spec, cs, ct, h, half_len);
    while (prev.tail > opts.tail_tol * std::abs(prev.value) && half_len < 1000.0) {
        half_len *= 2.0;
        prev = trapezoid(spec, cs, ct, h, half_len);
    }
    std::size_t nodes = prev.nodes;
    double delta = std::numeric_limits<double>::infinity();
    for (int level = 0; level < 8; ++level) {
        h *= 0.5;
        const Level cur = trapezoid(spec, cs, ct, h, half_len);
        nodes += cur.nodes;
        delta = std::abs(cur.value - prev.value);
        prev = cur;
        if (delta <= opts.step_tol * std::abs(cur.value)) break;
    }
    if (!(delta <= opts.step_tol * std::abs(prev.value)))
        throw ConvergenceError("bivariate G quadrature did not converge", prev.value, nodes);

    BivariateResult res;
    res.value = prev.value;
    res.error = delta + prev.tail;
    res.nodes = nodes;
    res.abscissa_s = cs;
    res.abscissa_t = ct;
    return res;
}

} // namespace rfso::specfun
