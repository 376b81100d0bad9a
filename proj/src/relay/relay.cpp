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

#include "rfso/relay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rfso/error.hpp"
#include "rfso/specfun/bivariate_g.hpp"
#include "rfso/specfun/gamma.hpp"
#include "rfso/specfun/meijer_g.hpp"
#include "rfso/specfun/summation.hpp"

namespace rfso::relay {

namespace {

using specfun::CompensatedSum;
using specfun::MeijerGSpec;

// exp() of anything below this underflows to zero.
constexpr double kLogUnderflow = -745.0;

struct Link {
    int m = 1;
    double omega = 1.0;
    double c = 1.0;
    int r = 1;
    channels::DerivedFsoParams d;
    std::vector<channels::KappaVectors> kappas; // indexed by j

    double rate() const { return m / omega; }
};

Link make_link(const RelayConfig& cfg)
{
    validate(cfg);
    Link l;
    l.m = cfg.rf.m;
    l.omega = cfg.rf.omega;
    l.c = cfg.c_gain;
    l.r = channels::order(cfg.fso.detection);
    l.d = channels::derive_fso(cfg.fso);
    for (int j = 0; j < l.m; ++j) l.kappas.push_back(channels::build_kappas(cfg.fso, j));
    return l;
}

// 1 / (j! (k-j)!) in log form.
double log_binomial_weight(int k, int j)
{
    return -std::lgamma(j + 1.0) - std::lgamma(k - j + 1.0);
}

std::size_t order_m(const Link& l)
{
    return static_cast<std::size_t>(3 * l.r + 1);
}

// G^{3r+1,0}_{r,3r+1}[· | κ1; κ2(j)]
MeijerGSpec cdf_kernel(const Link& l, int j)
{
    const auto& kv = l.kappas[static_cast<std::size_t>(j)];
    return {order_m(l), 0, kv.kappa1, kv.kappa2};
}

// z d/dz of the CDF kernel: G^{3r+1,1}_{r+1,3r+2}[· | 0, κ1; κ2(j), 1]
MeijerGSpec pdf_kernel(const Link& l, int j)
{
    const auto& kv = l.kappas[static_cast<std::size_t>(j)];
    MeijerGSpec g{order_m(l), 1, {0.0}, kv.kappa2};
    g.a.insert(g.a.end(), kv.kappa1.begin(), kv.kappa1.end());
    g.b.push_back(1.0);
    return g;
}

// Laplace-type transform of the CDF kernel: G^{3r+1,1}_{r+1,3r+1}[· | top, κ1; κ2(j)]
MeijerGSpec raised_kernel(const Link& l, int j, double top)
{
    const auto& kv = l.kappas[static_cast<std::size_t>(j)];
    MeijerGSpec g{order_m(l), 1, {top}, kv.kappa2};
    g.a.insert(g.a.end(), kv.kappa1.begin(), kv.kappa1.end());
    return g;
}

struct Accum {
    CompensatedSum sum;
    double error = 0.0;
    std::size_t terms = 0;

    void add(double weight, const specfun::GResult& g)
    {
        sum.add(weight * g.value);
        error += std::abs(weight) * g.error;
        terms += g.terms;
    }
};

// Leading small-argument term of the first pole of a Meijer G family with
// the bottom parameter index i: z^{b_i} prod Γ(b_l - b_i) prod Γ(1 + b_i - a_l)
// / prod Γ(a_l - b_i) / prod Γ(1 + b_i - b_l).
double slater_leading(const MeijerGSpec& g, std::size_t i, double z)
{
    const double bi = g.b[i];
    double log_abs = bi * std::log(z);
    int sign = 1;
    auto mul = [&](double x) {
        const auto lg = specfun::log_gamma_signed(x);
        log_abs += lg.log_abs;
        sign *= lg.sign;
    };
    double rg = 1.0;
    for (std::size_t l = 0; l < g.m; ++l)
        if (l != i) mul(g.b[l] - bi);
    for (std::size_t l = 0; l < g.n; ++l) mul(1.0 + bi - g.a[l]);
    for (std::size_t l = g.n; l < g.p(); ++l) {
        const double x = g.a[l] - bi;
        rg *= specfun::is_nonpositive_integer(x, 1e-12) ? 0.0 : specfun::reciprocal_gamma(x);
    }
    for (std::size_t l = g.m; l < g.q(); ++l) {
        const double x = 1.0 + bi - g.b[l];
        rg *= specfun::is_nonpositive_integer(x, 1e-12) ? 0.0 : specfun::reciprocal_gamma(x);
    }
    if (rg == 0.0) return 0.0;
    return sign * rg * std::exp(log_abs);
}

// High-SNR replacement for one G kernel: the leading term of every pole
// family, or only the dominant one.
struct LeadingSum {
    double value = 0.0;
    std::size_t terms = 0;
};

LeadingSum leading_terms(const MeijerGSpec& g, double z, AsymptoticMode mode)
{
    const std::size_t j_index = g.m - 1;
    const auto ps = specfun::pole_structure(g);
    struct Item {
        double exponent;
        double value;
        bool has_j;
    };
    std::vector<Item> items;
    for (const auto& cl : ps.groups) {
        Item it{cl.base, 0.0, false};
        for (std::size_t idx : cl.members) it.has_j = it.has_j || idx == j_index;
        if (cl.multiplicity() == 1)
            it.value = slater_leading(g, cl.members.front(), z);
        else
            it.value = specfun::leading_residues(g, cl, z);
        items.push_back(it);
    }
    LeadingSum out;
    if (!mode.dominant_only) {
        CompensatedSum s;
        for (const auto& it : items) s.add(it.value);
        out.value = s.value();
        out.terms = items.size();
        return out;
    }
    const Item* pick = nullptr;
    for (const auto& it : items) {
        if (mode.dominant == DominantTerm::j_slot) {
            if (it.has_j) pick = &it;
        } else if (it.value != 0.0 && (pick == nullptr || it.exponent < pick->exponent)) {
            pick = &it;
        }
    }
    if (pick != nullptr) {
        out.value = pick->value;
        out.terms = 1;
    }
    return out;
}

MetricPath asymptotic_path(AsymptoticMode mode)
{
    return mode.dominant_only ? MetricPath::asymptotic_dominant : MetricPath::asymptotic_all_terms;
}

// A e^{-mγ/Ω} Σ_k Σ_j (mγ/Ω)^{k-j} / (j!(k-j)!) G[BmCγ/(μΩ)]
MetricResult ccdf_sum(const Link& l, double gamma)
{
    MetricResult res;
    const double x = l.rate() * gamma;
    const double z = l.d.B * l.m * l.c * gamma / (l.d.mu_r * l.omega);
    Accum acc;
    for (int k = 0; k < l.m; ++k) {
        for (int j = 0; j <= k; ++j) {
            const double lw = -x + (k - j) * std::log(x) + log_binomial_weight(k, j);
            if (lw < kLogUnderflow) continue;
            acc.add(std::exp(lw), specfun::meijer_g_eval(cdf_kernel(l, j), z));
        }
    }
    res.value = l.d.A * acc.sum.value();
    res.error_estimate = l.d.A * acc.error;
    res.terms_used = acc.terms;
    return res;
}

} // namespace

void validate(const RelayConfig& cfg)
{
    channels::validate(cfg.rf);
    channels::validate(cfg.fso);
    require(std::isfinite(cfg.c_gain) && cfg.c_gain > 0.0, "relay: fixed gain C must be positive");
}

std::string to_string(MetricPath path)
{
    switch (path) {
    case MetricPath::exact: return "exact";
    case MetricPath::asymptotic_all_terms: return "asymptotic_all_terms";
    case MetricPath::asymptotic_dominant: return "asymptotic_dominant";
    case MetricPath::quadrature: return "quadrature";
    case MetricPath::egbmgf: return "egbmgf";
    }
    return "unknown";
}

MetricResult e2e_ccdf(const RelayConfig& cfg, double gamma)
{
    const Link l = make_link(cfg);
    require(std::isfinite(gamma) && gamma >= 0.0, "e2e ccdf: gamma must be non-negative");
    if (gamma == 0.0) return {1.0, 0, 0.0, MetricPath::exact};
    MetricResult res = ccdf_sum(l, gamma);
    res.value = std::clamp(res.value, 0.0, 1.0);
    return res;
}

MetricResult e2e_cdf(const RelayConfig& cfg, double gamma)
{
    MetricResult res = e2e_ccdf(cfg, gamma);
    if (gamma == 0.0) return {0.0, 0, 0.0, MetricPath::exact};
    res.value = std::clamp(1.0 - res.value, 0.0, 1.0);
    return res;
}

MetricResult e2e_cdf_asymptotic(const RelayConfig& cfg, double gamma, AsymptoticMode mode)
{
    const Link l = make_link(cfg);
    require(std::isfinite(gamma) && gamma >= 0.0, "e2e cdf: gamma must be non-negative");
    MetricResult res;
    res.path = asymptotic_path(mode);
    if (gamma == 0.0) return res;

    const double x = l.rate() * gamma;
    const double z = l.d.B * l.m * l.c * gamma / (l.d.mu_r * l.omega);
    CompensatedSum sum;
    for (int k = 0; k < l.m; ++k) {
        for (int j = 0; j <= k; ++j) {
            const double lw = -x + (k - j) * std::log(x) + log_binomial_weight(k, j);
            if (lw < kLogUnderflow) continue;
            const LeadingSum lead = leading_terms(cdf_kernel(l, j), z, mode);
            sum.add(std::exp(lw) * lead.value);
            res.terms_used += lead.terms;
        }
    }
    res.value = 1.0 - l.d.A * sum.value();
    try {
        res.error_estimate = std::abs(res.value - e2e_cdf(cfg, gamma).value);
    } catch (const std::exception&) {
        res.error_estimate = std::numeric_limits<double>::infinity();
    }
    return res;
}

MetricResult e2e_pdf(const RelayConfig& cfg, double gamma)
{
    const Link l = make_link(cfg);
    require(std::isfinite(gamma) && gamma > 0.0, "e2e pdf: gamma must be positive");
    const double x = l.rate() * gamma;
    const double z = l.d.B * l.m * l.c * gamma / (l.d.mu_r * l.omega);
    Accum acc;
    for (int k = 0; k < l.m; ++k) {
        for (int j = 0; j <= k; ++j) {
            const double lw = -x + (k - j) * std::log(x) + log_binomial_weight(k, j);
            if (lw < kLogUnderflow) continue;
            const double w = std::exp(lw);
            acc.add(w * (l.rate() - (k - j) / gamma), specfun::meijer_g_eval(cdf_kernel(l, j), z));
            acc.add(-w / gamma, specfun::meijer_g_eval(pdf_kernel(l, j), z));
        }
    }
    MetricResult res;
    res.value = std::max(0.0, l.d.A * acc.sum.value());
    res.error_estimate = l.d.A * acc.error;
    res.terms_used = acc.terms;
    return res;
}

MetricResult e2e_mgf(const RelayConfig& cfg, double s)
{
    const Link l = make_link(cfg);
    require(std::isfinite(s) && s >= 0.0, "e2e mgf: s must be non-negative");
    if (s == 0.0) return {1.0, 0, 0.0, MetricPath::exact};
    const double lam = s + l.rate();
    const double z = l.d.B * l.m * l.c / (l.d.mu_r * (l.omega * s + l.m));
    Accum acc;
    for (int k = 0; k < l.m; ++k) {
        for (int j = 0; j <= k; ++j) {
            const double lw = (k - j) * std::log(l.rate()) + (j - k - 1) * std::log(lam) + log_binomial_weight(k, j);
            acc.add(std::exp(lw), specfun::meijer_g_eval(raised_kernel(l, j, j - k), z));
        }
    }
    MetricResult res;
    res.value = std::clamp(1.0 - s * l.d.A * acc.sum.value(), 0.0, 1.0);
    res.error_estimate = s * l.d.A * acc.error;
    res.terms_used = acc.terms;
    return res;
}

MetricResult e2e_mgf_asymptotic(const RelayConfig& cfg, double s, AsymptoticMode mode)
{
    const Link l = make_link(cfg);
    require(std::isfinite(s) && s >= 0.0, "e2e mgf: s must be non-negative");
    MetricResult res{1.0, 0, 0.0, asymptotic_path(mode)};
    if (s == 0.0) return res;
    const double lam = s + l.rate();
    const double z = l.d.B * l.m * l.c / (l.d.mu_r * (l.omega * s + l.m));
    CompensatedSum sum;
    for (int k = 0; k < l.m; ++k) {
        for (int j = 0; j <= k; ++j) {
            const double lw = (k - j) * std::log(l.rate()) + (j - k - 1) * std::log(lam) + log_binomial_weight(k, j);
            const LeadingSum lead = leading_terms(raised_kernel(l, j, j - k), z, mode);
            sum.add(std::exp(lw) * lead.value);
            res.terms_used += lead.terms;
        }
    }
    res.value = 1.0 - s * l.d.A * sum.value();
    try {
        res.error_estimate = std::abs(res.value - e2e_mgf(cfg, s).value);
    } catch (const std::exception&) {
        res.error_estimate = std::numeric_limits<double>::infinity();
    }
    return res;
}

MetricResult e2e_moment(const RelayConfig& cfg, int n)
{
    const Link l = make_link(cfg);
    require(n >= 1, "e2e moment: order n must be >= 1");
    const double z = l.d.B * l.c / l.d.mu_r;
    Accum acc;
    for (int k = 0; k < l.m; ++k)
        for (int j = 0; j <= k; ++j)
            acc.add(std::exp(log_binomial_weight(k, j)),
                    specfun::meijer_g_eval(raised_kernel(l, j, 1.0 - n - k + j), z));
    const double pref = n * l.d.A * std::pow(l.omega / l.m, n);
    MetricResult res;
    res.value = pref * acc.sum.value();
    res.error_estimate = pref * acc.error;
    res.terms_used = acc.terms;
    return res;
}

MetricResult outage_probability(const RelayConfig& cfg, double gamma_th)
{
    return e2e_cdf(cfg, gamma_th);
}

MetricResult amount_of_fading(const RelayConfig& cfg, int n)
{
    require(n >= 1, "amount of fading: order n must be >= 1");
    if (n == 1) {
        validate(cfg);
        return {0.0, 0, 0.0, MetricPath::exact};
    }
    const MetricResult mn = e2e_moment(cfg, n);
    const MetricResult m1 = e2e_moment(cfg, 1);
    const double ratio = mn.value / std::pow(m1.value, n);
    MetricResult res;
    res.value = ratio - 1.0;
    res.error_estimate = std::abs(ratio) * (mn.error_estimate / std::abs(mn.value) +
                                            n * m1.error_estimate / std::abs(m1.value));
    res.terms_used = mn.terms_used + m1.terms_used;
    return res;
}

namespace {

struct BerSetup {
    double lam;
    double z;
    double pref;
};

BerSetup ber_setup(const Link& l, const BinaryModulation& mod)
{
    require(std::isfinite(mod.p) && mod.p > 0.0, "BER: modulation parameter p must be positive");
    require(std::isfinite(mod.q) && mod.q > 0.0, "BER: modulation parameter q must be positive");
    BerSetup s;
    s.lam = mod.q + l.rate();
    s.z = l.d.B * l.m * l.c / (l.d.mu_r * (mod.q * l.omega + l.m));
    s.pref = l.d.A * std::exp(mod.p * std::log(mod.q) - std::lgamma(mod.p)) / 2.0;
    return s;
}

} // namespace

MetricResult average_ber(const RelayConfig& cfg, const BinaryModulation& mod)
{
    const Link l = make_link(cfg);
    const BerSetup b = ber_setup(l, mod);
    Accum acc;
    for (int k = 0; k < l.m; ++k) {
        for (int j = 0; j <= k; ++j) {
            const double lw =
                (k - j) * std::log(l.rate()) + (j - k - mod.p) * std::log(b.lam) + log_binomial_weight(k, j);
            acc.add(std::exp(lw), specfun::meijer_g_eval(raised_kernel(l, j, 1.0 - mod.p - k + j), b.z));
        }
    }
    MetricResult res;
    res.value = std::clamp(0.5 - b.pref * acc.sum.value(), 0.0, 0.5);
    res.error_estimate = b.pref * acc.error;
    res.terms_used = acc.terms;
    return res;
}

MetricResult average_ber_asymptotic(const RelayConfig& cfg, const BinaryModulation& mod, AsymptoticMode mode)
{
    const Link l = make_link(cfg);
    const BerSetup b = ber_setup(l, mod);
    MetricResult res;
    res.path = asymptotic_path(mode);
    CompensatedSum sum;
    for (int k = 0; k < l.m; ++k) {
        for (int j = 0; j <= k; ++j) {
            const double lw =
                (k - j) * std::log(l.rate()) + (j - k - mod.p) * std::log(b.lam) + log_binomial_weight(k, j);
            const LeadingSum lead = leading_terms(raised_kernel(l, j, 1.0 - mod.p - k + j), b.z, mode);
            sum.add(std::exp(lw) * lead.value);
            res.terms_used += lead.terms;
        }
    }
    res.value = 0.5 - b.pref * sum.value();
    try {
        res.error_estimate = std::abs(res.value - average_ber(cfg, mod).value);
    } catch (const std::exception&) {
        res.error_estimate = std::numeric_limits<double>::infinity();
    }
    return res;
}

MetricResult ergodic_capacity(const RelayConfig& cfg, CapacityPath path)
{
    const Link l = make_link(cfg);
    MetricResult res;
    if (path == CapacityPath::quadrature) {
        res.path = MetricPath::quadrature;
        std::size_t terms = 0;
        // γ = t/(1-t) maps (0, ∞) onto (0, 1); dγ/(1+γ) = dt/(1-t).
        auto integrand = [&](double t) {
            if (t <= 0.0) return 1.0;
            if (t >= 1.0) return 0.0;
            const double gamma = t / (1.0 - t);
            const MetricResult c = ccdf_sum(l, gamma);
            terms += c.terms_used;
            return std::clamp(c.value, 0.0, 1.0) / (1.0 - t);
        };
        double err = 0.0;
        const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 20,
                                                                                      1e-8, &err);
        res.value = v / std::numbers::ln2;
        res.error_estimate = err / std::numbers::ln2;
        res.terms_used = terms;
        return res;
    }

    res.path = MetricPath::egbmgf;
    CompensatedSum sum;
    double err = 0.0;
    for (int k = 0; k < l.m; ++k) {
        for (int j = 0; j <= k; ++j) {
            specfun::BivariateGSpec g;
            const auto& kv = l.kappas[static_cast<std::size_t>(j)];
            g.outer_top = k - j + 1.0;
            g.inner_top = kv.kappa1;
            g.inner_bottom = kv.kappa2;
            g.x = l.omega / l.m;
            g.y = l.d.B * l.c / l.d.mu_r;
            const auto bg = specfun::bivariate_g(g);
            const double w = std::exp(log_binomial_weight(k, j));
            sum.add(w * bg.value);
            err += w * bg.error;
            res.terms_used += bg.nodes;
        }
    }
    const double pref = l.d.A / std::numbers::ln2 * l.omega / l.m;
    res.value = pref * sum.value();
    res.error_estimate = pref * err;
    return res;
}

} // namespace rfso::relay
