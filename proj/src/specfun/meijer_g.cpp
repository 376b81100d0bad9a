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

#include "rfso/specfun/meijer_g.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

#include <boost/math/tools/minima.hpp>

#include "rfso/error.hpp"
#include "rfso/specfun/gamma.hpp"
#include "rfso/specfun/summation.hpp"

namespace rfso::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct FamilySum {
    double value = 0.0;
    double error = 0.0;
    double max_term = 0.0;
    std::size_t terms = 0;
    bool log_case = false;
    bool finite = true;
};

// Stops once the last `kQuietRun` terms are all below rel_tol * |sum|.
constexpr int kQuietRun = 3;

bool near_integer(double x, double tol, double& rounded)
{
    rounded = std::round(x);
    return std::abs(x - rounded) <= tol;
}

// Simple-pole (Slater) family of a singleton cluster h. Returns false when
// the hypergeometric form degenerates (a bottom parameter 1 + b_h - b_j with
// j > m is a non-positive integer) and the Laurent path must be used.
bool slater_family(const MeijerGSpec& s, std::size_t h, double z, const MeijerGOptions& opts,
                   FamilySum& out)
{
    const double bh = s.b[h];
    const std::size_t p = s.p();
    const std::size_t q = s.q();

    for (std::size_t j = s.m; j < q; ++j)
        if (is_nonpositive_integer(1.0 + bh - s.b[j], opts.pole_tol)) return false;

    double log_pref = bh * std::log(z);
    int sign = 1;
    for (std::size_t j = 0; j < s.m; ++j) {
        if (j == h) continue;
        const auto lg = log_gamma_signed(s.b[j] - bh);
        log_pref += lg.log_abs;
        sign *= lg.sign;
    }
    for (std::size_t j = 0; j < s.n; ++j) {
        const auto lg = log_gamma_signed(1.0 + bh - s.a[j]);
        log_pref += lg.log_abs;
        sign *= lg.sign;
    }
    for (std::size_t j = s.m; j < q; ++j) {
        const auto lg = log_gamma_signed(1.0 + bh - s.b[j]);
        log_pref -= lg.log_abs;
        sign *= lg.sign;
    }
    for (std::size_t j = s.n; j < p; ++j) {
        if (is_nonpositive_integer(s.a[j] - bh, opts.pole_tol)) {
            out = FamilySum{}; // 1/Γ at a pole: the whole family cancels
            return true;
        }
        const auto lg = log_gamma_signed(s.a[j] - bh);
        log_pref -= lg.log_abs;
        sign *= lg.sign;
    }

    const int parity = static_cast<int>((p + 2 * q - s.m - s.n) % 2);
    const double x = parity ? -z : z; // (-1)^{p-m-n} z

    CompensatedSum sum;
    double abs_sum = 0.0;
    double term = sign * std::exp(log_pref);
    int quiet = 0;
    std::size_t k = 0;
    for (; k < opts.max_terms; ++k) {
        if (!std::isfinite(term)) {
            out.finite = false;
            break;
        }
        sum.add(term);
        abs_sum += std::abs(term);
        out.max_term = std::max(out.max_term, std::abs(term));
        if (term == 0.0) break; // terminating series
        if (std::abs(term) <= opts.rel_tol * std::abs(sum.value())) {
            if (++quiet >= kQuietRun) break;
        } else {
            quiet = 0;
        }
        const double kk = static_cast<double>(k);
        double ratio = x / (kk + 1.0);
        for (std::size_t j = 0; j < p; ++j) ratio *= 1.0 + bh - s.a[j] + kk;
        for (std::size_t j = 0; j < q; ++j)
            if (j != h) ratio /= 1.0 + bh - s.b[j] + kk;
        term *= ratio;
    }
    if (k == opts.max_terms)
        throw ConvergenceError("Meijer G residue series did not converge", sum.value(), k);
    out.value = sum.value();
    out.terms = k + 1;
    out.error = std::abs(term) + 2.0 * kEps * abs_sum;
    return true;
}

// One factor of the Mellin-Barnes kernel expanded around a pole s* as
//   sign * exp(log_abs) * eps^order * exp(sum_d coeff[d] eps^d).
struct LaurentFactor {
    int order = 0;
    int sign = 1;
    double log_abs = 0.0;
};

class LaurentTerm {
public:
    explicit LaurentTerm(std::size_t degree) : coeff_(degree + 1, 0.0) {}

    // Γ(x + dir*eps) with x not at a pole.
    void gamma_regular(double x, int dir, bool reciprocal)
    {
        const auto lg = log_gamma_signed(x);
        const double sgn = reciprocal ? -1.0 : 1.0;
        sign_ *= lg.sign;
        log_abs_ += sgn * lg.log_abs;
        double fact = 1.0;
        double dpow = 1.0;
        for (std::size_t d = 1; d < coeff_.size(); ++d) {
            fact *= static_cast<double>(d);
            dpow *= dir;
            coeff_[d] += sgn * polygamma(static_cast<int>(d) - 1, x) * dpow / fact;
        }
    }

    // Γ(-n + dir*eps), n >= 0.
    void gamma_pole(int n, int dir, bool reciprocal)
    {
        const double sgn = reciprocal ? -1.0 : 1.0;
        sign_ *= ((n % 2) ? -1 : 1) * dir;
        order_ += reciprocal ? 1 : -1;
        log_abs_ -= sgn * std::lgamma(1.0 + n);
        double fact = 1.0;
        double dpow = 1.0;
        for (std::size_t d = 1; d < coeff_.size(); ++d) {
            fact *= static_cast<double>(d);
            dpow *= dir;
            double c = -polygamma(static_cast<int>(d) - 1, 1.0 + n) * ((d % 2) ? -1.0 : 1.0) / fact;
            if (d % 2 == 0) c += 2.0 * std::riemann_zeta(static_cast<double>(d)) / static_cast<double>(d);
            coeff_[d] += sgn * dpow * c;
        }
    }

    void power(double s_star, double log_z)
    {
        log_abs_ += s_star * log_z;
        if (coeff_.size() > 1) coeff_[1] += log_z;
    }

    int order() const noexcept { return order_; }

    // Coefficient of eps^{-1}.
    double residue() const
    {
        const int mult = -order_;
        if (mult <= 0) return 0.0;
        const std::size_t top = static_cast<std::size_t>(mult - 1);
        std::vector<double> e(top + 1, 0.0);
        e[0] = 1.0;
        for (std::size_t k = 1; k <= top; ++k) {
            double acc = 0.0;
            for (std::size_t d = 1; d <= k; ++d)
                acc += static_cast<double>(d) * coeff_[d] * e[k - d];
            e[k] = acc / static_cast<double>(k);
        }
        return sign_ * std::exp(log_abs_) * e[top];
    }

private:
    std::vector<double> coeff_;
    double log_abs_ = 0.0;
    int sign_ = 1;
    int order_ = 0;
};

// Contribution -Res_{s = base + k} of the kernel, for the pole family of a
// cluster. Handles poles of any order and zeros from the denominators.
double laurent_term(const MeijerGSpec& s, const PoleCluster& cl, std::size_t k, double log_z,
                    const MeijerGOptions& opts)
{
    const double s_star = cl.base + static_cast<double>(k);
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const int kk = static_cast<int>(k);

    std::vector<int> member_offset(s.m, std::numeric_limits<int>::min());
    for (std::size_t i = 0; i < cl.members.size(); ++i) member_offset[cl.members[i]] = cl.offsets[i];

    // First pass: pole order only.
    int order = 0;
    for (std::size_t j = 0; j < s.m; ++j)
        if (member_offset[j] != std::numeric_limits<int>::min() && member_offset[j] - kk <= 0) --order;
    for (std::size_t j = s.m; j < q; ++j)
        if (is_nonpositive_integer(1.0 - s.b[j] + s_star, opts.pole_tol)) ++order;
    for (std::size_t j = s.n; j < p; ++j)
        if (is_nonpositive_integer(s.a[j] - s_star, opts.pole_tol)) ++order;
    if (order >= 0) return 0.0;

    LaurentTerm t(static_cast<std::size_t>(-order - 1));
    double r = 0.0;
    for (std::size_t j = 0; j < s.m; ++j) {
        if (member_offset[j] != std::numeric_limits<int>::min()) {
            const int x = member_offset[j] - kk;
            if (x <= 0)
                t.gamma_pole(-x, -1, false);
            else
                t.gamma_regular(static_cast<double>(x), -1, false);
        } else {
            t.gamma_regular(s.b[j] - s_star, -1, false);
        }
    }
    for (std::size_t j = 0; j < s.n; ++j) {
        const double x = 1.0 - s.a[j] + s_star;
        if (is_nonpositive_integer(x, opts.pole_tol))
            throw InvalidInput("Meijer G: top and bottom poles collide");
        t.gamma_regular(x, 1, false);
    }
    for (std::size_t j = s.m; j < q; ++j) {
        const double x = 1.0 - s.b[j] + s_star;
        if (is_nonpositive_integer(x, opts.pole_tol) && near_integer(x, opts.pole_tol, r))
            t.gamma_pole(static_cast<int>(-r), 1, true);
        else
            t.gamma_regular(x, 1, true);
    }
    for (std::size_t j = s.n; j < p; ++j) {
        const double x = s.a[j] - s_star;
        if (is_nonpositive_integer(x, opts.pole_tol) && near_integer(x, opts.pole_tol, r))
            t.gamma_pole(static_cast<int>(-r), -1, true);
        else
            t.gamma_regular(x, -1, true);
    }
    t.power(s_star, log_z);
    return -t.residue();
}

FamilySum laurent_family(const MeijerGSpec& s, const PoleCluster& cl, double z,
                         const MeijerGOptions& opts)
{
    // No early stop while poles of the family may still be cancelled by
    // zeros of 1/Γ(1 - b_j + s), j > m, or raised by further members.
    int quiet_from = *std::max_element(cl.offsets.begin(), cl.offsets.end());
    for (std::size_t j = s.m; j < s.q(); ++j) {
        double r = 0.0;
        const double d = s.b[j] - 1.0 - cl.base;
        if (near_integer(d, opts.pole_tol, r) && r >= 0.0) quiet_from = std::max(quiet_from, static_cast<int>(r));
    }

    FamilySum out;
    out.log_case = cl.multiplicity() > 1;
    const double log_z = std::log(z);
    CompensatedSum sum;
    double abs_sum = 0.0;
    double term = 0.0;
    int quiet = 0;
    std::size_t k = 0;
    for (; k < opts.max_terms; ++k) {
        term = laurent_term(s, cl, k, log_z, opts);
        if (!std::isfinite(term)) {
            out.finite = false;
            break;
        }
        sum.add(term);
        abs_sum += std::abs(term);
        out.max_term = std::max(out.max_term, std::abs(term));
        if (static_cast<int>(k) > quiet_from && std::abs(term) <= opts.rel_tol * std::abs(sum.value())) {
            if (++quiet >= kQuietRun) break;
        } else {
            quiet = 0;
        }
    }
    if (k == opts.max_terms)
        throw ConvergenceError("Meijer G logarithmic residue series did not converge", sum.value(), k);
    out.value = sum.value();
    out.terms = k + 1;
    out.error = std::abs(term) + 4.0 * kEps * abs_sum;
    return out;
}

GResult residue_series(const MeijerGSpec& s, double z, const MeijerGOptions& opts,
                       const PoleStructure& ps, double& max_term, bool& finite)
{
    GResult res;
    CompensatedSum total;
    max_term = 0.0;
    finite = true;
    bool any_log = false;
    for (const auto& cl : ps.groups) {
        FamilySum fam;
        bool done = false;
        if (cl.multiplicity() == 1) done = slater_family(s, cl.members.front(), z, opts, fam);
        if (!done) fam = laurent_family(s, cl, z, opts);
        total.add(fam.value);
        res.error += fam.error;
        res.terms += fam.terms;
        max_term = std::max(max_term, fam.max_term);
        finite = finite && fam.finite;
        any_log = any_log || fam.log_case;
    }
    res.value = total.value();
    res.path = any_log ? GPath::residue_log : GPath::residue;
    return res;
}

MeijerGSpec invert(const MeijerGSpec& s)
{
    MeijerGSpec out;
    out.m = s.n;
    out.n = s.m;
    out.a.reserve(s.q());
    out.b.reserve(s.p());
    for (double v : s.b) out.a.push_back(1.0 - v);
    for (double v : s.a) out.b.push_back(1.0 - v);
    return out;
}

// Abscissa minimising the integrand on the real axis. Near the saddle the
// integrand is no larger than the result, which keeps the oscillatory
// quadrature free of cancellation.
struct Saddle {
    double abscissa;
    double log_magnitude;
};

Saddle find_saddle(const MeijerGSpec& s, const Strip& st, double log_z)
{
    auto g = [&](double c) {
        double acc = c * log_z;
        for (std::size_t j = 0; j < s.m; ++j) acc += std::lgamma(s.b[j] - c);
        for (std::size_t j = 0; j < s.n; ++j) acc += std::lgamma(1.0 - s.a[j] + c);
        for (std::size_t j = s.m; j < s.q(); ++j) acc -= std::lgamma(1.0 - s.b[j] + c);
        for (std::size_t j = s.n; j < s.p(); ++j) acc -= std::lgamma(s.a[j] - c);
        return std::isfinite(acc) ? acc : 1e300;
    };
    double lo = st.lo;
    double hi = st.hi;
    if (std::isfinite(lo) && std::isfinite(hi)) {
        const double w = hi - lo;
        lo += 0.1 * std::min(w, 2.5);
        hi -= 0.1 * std::min(w, 2.5);
    } else if (std::isfinite(hi)) {
        lo = hi - 20.0 - std::min(500.0, std::exp(log_z));
        hi -= 0.25;
    } else if (std::isfinite(lo)) {
        hi = lo + 20.0 + std::min(500.0, std::exp(-log_z));
        lo += 0.25;
    } else {
        lo = -20.0 - std::min(500.0, std::exp(log_z));
        hi = 20.0 + std::min(500.0, std::exp(-log_z));
    }
    const auto best = boost::math::tools::brent_find_minima(g, lo, hi, 30);
    return {best.first, best.second};
}


GResult evaluate(const MeijerGSpec& spec, double z, const MeijerGOptions& opts, bool reroute_near);

GResult perturbed(const MeijerGSpec& s, double z, const MeijerGOptions& opts, const PoleStructure& ps)
{
    auto shifted = [&](double sgn, double scale) {
        MeijerGSpec t = s;
        for (const auto& cl : ps.groups) {
            if (cl.multiplicity() < 2) continue;
            std::vector<std::size_t> order(cl.members.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t x, std::size_t y) { return cl.offsets[x] < cl.offsets[y]; });
            // Roundoff in the split series grows like delta^-(M-1), so higher
            // multiplicities use a wider split.
            const double step = scale * std::pow(opts.perturb_delta, 1.0 / static_cast<double>(order.size() - 1));
            for (std::size_t r = 1; r < order.size(); ++r)
                t.b[cl.members[order[r]]] += sgn * static_cast<double>(r) * step;
        }
        return t;
    };
    GResult out;
    out.path = GPath::residue_perturbed;
    // The symmetric average is even in delta; one Richardson step removes the
    // delta^2 term.
    double avg[2];
    for (int level = 0; level < 2; ++level) {
        const double scale = level == 0 ? 1.0 : 0.5;
        const GResult plus = evaluate(shifted(1.0, scale), z, opts, false);
        const GResult minus = evaluate(shifted(-1.0, scale), z, opts, false);
        avg[level] = 0.5 * (plus.value + minus.value);
        out.error = std::max({out.error, plus.error, minus.error});
        out.terms += plus.terms + minus.terms;
    }
    out.value = (4.0 * avg[1] - avg[0]) / 3.0;
    out.error += std::abs(avg[1] - avg[0]) / 3.0;
    return out;
}

bool contour_feasible(const MeijerGSpec& s)
{
    const Strip st = contour_strip(s);
    const double decay = static_cast<double>(s.m + s.n) - 0.5 * static_cast<double>(s.p() + s.q());
    return st.lo < st.hi && decay > 0.0;
}

GResult evaluate(const MeijerGSpec& spec, double z, const MeijerGOptions& opts, bool reroute_near)
{
    const MeijerGSpec s = cancel_parameters(spec);

    if (s.m == 0 && s.q() > s.p()) return GResult{0.0, 0.0, 0, GPath::residue};

    if (s.p() == s.q()) {
        if (z > 1.0 / 0.9) return evaluate(invert(s), 1.0 / z, opts, reroute_near);
        if (z >= 0.9) {
            if (!contour_feasible(s)) throw InvalidInput("Meijer G with p == q near |z| = 1 has no usable contour");
            return meijer_g_contour(s, z);
        }
    }

    // Far in the exponentially small tail the series runs to its term limit
    // before overflowing; the saddle estimate settles those cases at once.
    if (z > 1.0 && s.p() < s.q() && contour_feasible(s)) {
        if (find_saddle(s, contour_strip(s), std::log(z)).log_magnitude < -800.0)
            return GResult{0.0, 0.0, 0, GPath::contour};
    }

    const PoleStructure ps = pole_structure(s, opts.pole_tol);
    if (reroute_near && opts.allow_contour && ps.min_noninteger_gap < opts.near_tol && contour_feasible(s))
        return meijer_g_contour(s, z);

    if (opts.coincident == CoincidentPoleMethod::perturb && ps.max_multiplicity() > 1)
        return perturbed(s, z, opts, ps);

    double max_term = 0.0;
    bool finite = true;
    GResult res;
    try {
        res = residue_series(s, z, opts, ps, max_term, finite);
    } catch (const ConvergenceError&) {
        if (!(opts.allow_contour && contour_feasible(s))) throw;
        return meijer_g_contour(s, z);
    }
    const bool cancelled = max_term > opts.cancellation_limit * std::abs(res.value);
    if ((!finite || !std::isfinite(res.value) || cancelled) && opts.allow_contour && contour_feasible(s)) {
        GResult alt = meijer_g_contour(s, z);
        if (!finite || !std::isfinite(res.value) || alt.error < res.error) return alt;
    }
    if (!finite || !std::isfinite(res.value))
        throw ConvergenceError("Meijer G residue series overflowed", res.value, res.terms);
    return res;
}

} // namespace

std::size_t PoleStructure::max_multiplicity() const noexcept
{
    std::size_t mx = 0;
    for (const auto& g : groups) mx = std::max(mx, g.multiplicity());
    return mx;
}

std::string to_string(GPath path)
{
    switch (path) {
    case GPath::residue: return "residue";
    case GPath::residue_log: return "residue_log";
    case GPath::residue_perturbed: return "residue_perturbed";
    case GPath::contour: return "contour";
    }
    return "unknown";
}

void validate(const MeijerGSpec& spec, double pole_tol)
{
    require(spec.m <= spec.q(), "Meijer G: m exceeds q");
    require(spec.n <= spec.p(), "Meijer G: n exceeds p");
    require(spec.q() >= spec.p(), "Meijer G: only q >= p is supported");
    for (double v : spec.a) require(std::isfinite(v), "Meijer G: non-finite top parameter");
    for (double v : spec.b) require(std::isfinite(v), "Meijer G: non-finite bottom parameter");
    for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = 0; j < spec.m; ++j) {
            const double d = spec.a[i] - spec.b[j];
            const double r = std::round(d);
            if (r >= 1.0 && std::abs(d - r) <= pole_tol)
                throw InvalidInput("Meijer G: a_i - b_j is a positive integer (undefined function)");
        }
    }
}

MeijerGSpec cancel_parameters(const MeijerGSpec& spec, double tol)
{
    MeijerGSpec s = spec;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = s.n; i < s.a.size() && !changed; ++i) {
            for (std::size_t j = 0; j < s.m && !changed; ++j) {
                if (std::abs(s.a[i] - s.b[j]) <= tol) {
                    s.a.erase(s.a.begin() + static_cast<std::ptrdiff_t>(i));
                    s.b.erase(s.b.begin() + static_cast<std::ptrdiff_t>(j));
                    --s.m;
                    changed = true;
                }
            }
        }
        for (std::size_t i = 0; i < s.n && !changed; ++i) {
            for (std::size_t j = s.m; j < s.b.size() && !changed; ++j) {
                if (std::abs(s.a[i] - s.b[j]) <= tol) {
                    s.a.erase(s.a.begin() + static_cast<std::ptrdiff_t>(i));
                    s.b.erase(s.b.begin() + static_cast<std::ptrdiff_t>(j));
                    --s.n;
                    changed = true;
                }
            }
        }
    }
    return s;
}

PoleStructure pole_structure(const MeijerGSpec& spec, double pole_tol)
{
    const std::size_t m = spec.m;
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    PoleStructure ps;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double d = spec.b[i] - spec.b[j];
            const double gap = std::abs(d - std::round(d));
            if (gap < pole_tol)
                parent[find(i)] = find(j);
            else
                ps.min_noninteger_gap = std::min(ps.min_noninteger_gap, gap);
        }
    }

    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = find(i);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end()) {
            roots.push_back(r);
            ps.groups.push_back({});
            it = roots.end() - 1;
        }
        ps.groups[static_cast<std::size_t>(it - roots.begin())].members.push_back(i);
    }
    for (auto& g : ps.groups) {
        std::size_t lowest = g.members.front();
        for (std::size_t i : g.members)
            if (spec.b[i] < spec.b[lowest]) lowest = i;
        g.base = spec.b[lowest];
        for (std::size_t i : g.members) g.offsets.push_back(static_cast<int>(std::lround(spec.b[i] - g.base)));
    }
    return ps;
}

GResult meijer_g_eval(const MeijerGSpec& spec, double z, const MeijerGOptions& opts)
{
    validate(spec, opts.pole_tol);
    require(std::isfinite(z) && z > 0.0, "Meijer G: argument must be positive");
    return evaluate(spec, z, opts, true);
}

double meijer_g(const MeijerGSpec& spec, double z)
{
    return meijer_g_eval(spec, z).value;
}

double leading_residues(const MeijerGSpec& spec, const PoleCluster& cluster, double z,
                        const MeijerGOptions& opts)
{
    require(std::isfinite(z) && z > 0.0, "Meijer G: argument must be positive");
    const int top = *std::max_element(cluster.offsets.begin(), cluster.offsets.end());
    const double log_z = std::log(z);
    CompensatedSum sum;
    for (int k = 0; k <= top; ++k) sum.add(laurent_term(spec, cluster, static_cast<std::size_t>(k), log_z, opts));
    return sum.value();
}

Strip contour_strip(const MeijerGSpec& s)
{
    Strip st{-kInf, kInf};
    for (std::size_t j = 0; j < s.n; ++j) st.lo = std::max(st.lo, s.a[j] - 1.0);
    for (std::size_t j = 0; j < s.m; ++j) st.hi = std::min(st.hi, s.b[j]);
    return st;
}

GResult meijer_g_contour(const MeijerGSpec& spec, double z)
{
    return meijer_g_contour(spec, z, std::numeric_limits<double>::quiet_NaN());
}

GResult meijer_g_contour(const MeijerGSpec& spec, double z, double abscissa)
{
    require(std::isfinite(z) && z > 0.0, "Meijer G: argument must be positive");
    const MeijerGSpec s = cancel_parameters(spec);
    const Strip st = contour_strip(s);
    const double decay = static_cast<double>(s.m + s.n) - 0.5 * static_cast<double>(s.p() + s.q());
    require(decay > 0.0, "Meijer G contour: integrand does not decay along vertical lines");
    require(st.lo < st.hi, "Meijer G contour: pole families are not separable by a vertical line");

    const double log_z = std::log(z);
    double c = abscissa;
    if (std::isnan(c)) c = find_saddle(s, st, log_z).abscissa;
    require(c > st.lo && c < st.hi, "Meijer G contour: abscissa outside the admissible strip");
    const double width = std::min(c - st.lo, st.hi - c);

    auto f = [&](double t) {
        const std::complex<double> sv(c, t);
        std::complex<double> acc = sv * log_z;
        for (std::size_t j = 0; j < s.m; ++j) acc += log_gamma(s.b[j] - sv);
        for (std::size_t j = 0; j < s.n; ++j) acc += log_gamma(1.0 - s.a[j] + sv);
        for (std::size_t j = s.m; j < s.q(); ++j) acc -= log_gamma(1.0 - s.b[j] + sv);
        for (std::size_t j = s.n; j < s.p(); ++j) acc -= log_gamma(s.a[j] - sv);
        const double v = std::exp(acc).real();
        return std::isfinite(v) ? v : 0.0;
    };

    // Truncation point from unit-step scan of the envelope.
    double peak = std::abs(f(0.0));
    double tmax = 4.0;
    for (double t = 1.0; t < 4000.0; t += 1.0) {
        const double v = std::abs(f(t)) + std::abs(f(t + 0.5));
        peak = std::max(peak, v);
        if (t >= 4.0 && v < 1e-18 * peak) {
            tmax = t + 2.0;
            break;
        }
        tmax = t + 2.0;
    }

    if (peak == 0.0) return GResult{0.0, 0.0, 0, GPath::contour};

    double h = std::min(0.5, width);
    std::size_t nodes = 0;
    CompensatedSum sum;
    CompensatedSum abs_sum;
    const double f0 = f(0.0);
    sum.add(0.5 * f0);
    abs_sum.add(0.5 * std::abs(f0));
    for (double t = h; t <= tmax; t += h) {
        const double v = f(t);
        sum.add(v);
        abs_sum.add(std::abs(v));
        ++nodes;
    }
    double prev = h * sum.value();
    double delta = kInf;
    for (int level = 0; level < 14; ++level) {
        const double hh = 0.5 * h;
        for (double t = hh; t <= tmax; t += h) {
            const double v = f(t);
            sum.add(v);
            abs_sum.add(std::abs(v));
            ++nodes;
        }
        h = hh;
        const double cur = h * sum.value();
        delta = std::abs(cur - prev);
        prev = cur;
        if (level >= 1 && delta <= std::max(1e-14 * std::abs(cur), 4.0 * kEps * h * abs_sum.value())) break;
    }
    GResult res;
    res.value = prev / std::numbers::pi;
    res.error = (delta + 10.0 * kEps * h * abs_sum.value()) / std::numbers::pi;
    res.terms = nodes;
    res.path = GPath::contour;
    return res;
}

} // namespace rfso::specfun
