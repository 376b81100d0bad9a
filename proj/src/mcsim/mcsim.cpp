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

#include "rfso/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "rfso/error.hpp"
#include "rfso/specfun/summation.hpp"

namespace rfso::mcsim {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
{
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(std::uint64_t seed) noexcept
{
    std::uint64_t st = seed;
    for (auto& w : s_) w = splitmix64(st);
}

Rng Rng::substream(std::uint64_t master, std::uint64_t stream) noexcept
{
    std::uint64_t st = master;
    const std::uint64_t a = splitmix64(st);
    st = stream ^ 0x6a09e667f3bcc909ULL;
    const std::uint64_t b = splitmix64(st);
    return Rng(a ^ rotl(b, 17));
}

std::uint64_t Rng::next() noexcept
{
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() noexcept
{
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() noexcept
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

double sample_gamma(double shape, double scale, Rng& rng)
{
    require(shape > 0.0 && scale > 0.0, "gamma sampler: shape and scale must be positive");
    if (shape < 1.0) {
        const double boost = std::pow(rng.uniform(), 1.0 / shape);
        return sample_gamma(shape + 1.0, scale, rng) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
}

double sample_gamma1(const channels::RfHop& rf, Rng& rng)
{
    return sample_gamma(static_cast<double>(rf.m), rf.omega / rf.m, rng);
}

namespace {

// Hop constants hoisted out of the per-sample loop.
struct FsoSampler {
    double alpha, beta, inv_xi2, scale, mu;
    bool square;

    explicit FsoSampler(const channels::FsoHop& fso)
        : alpha(fso.alpha), beta(fso.beta), inv_xi2(1.0 / (fso.xi * fso.xi)),
          scale(1.0 / channels::derive_fso(fso).h), mu(channels::derive_fso(fso).mu_r),
          square(fso.detection == channels::Detection::im_dd)
    {
    }

    double operator()(Rng& rng) const
    {
        const double x = sample_gamma(alpha, 1.0 / alpha, rng);
        const double y = sample_gamma(beta, 1.0 / beta, rng);
        const double w = x * y * std::pow(rng.uniform(), inv_xi2) * scale;
        return square ? mu * w * w : mu * w;
    }
};

struct E2eSampler {
    channels::RfHop rf;
    FsoSampler fso;
    double c;

    explicit E2eSampler(const SimPlan& plan) : rf(plan.cfg.rf), fso(plan.cfg.fso), c(plan.cfg.c_gain) {}

    double operator()(Rng& rng) const
    {
        const double g1 = sample_gamma1(rf, rng);
        const double g2 = fso(rng);
        return g1 * g2 / (g2 + c);
    }
};

} // namespace

double sample_gamma2(const channels::FsoHop& fso, Rng& rng)
{
    return FsoSampler(fso)(rng);
}

void validate(const SimPlan& plan)
{
    relay::validate(plan.cfg);
    require(plan.n_samples >= 1000, "simulation: at least 1000 samples are required");
    require(plan.batch >= 1, "simulation: batch size must be positive");
}

double sample_e2e(const SimPlan& plan, Rng& rng)
{
    return E2eSampler(plan)(rng);
}

namespace {

// Calls fn(index, value) for samples [begin, end) of a plan-indexed stream.
template <typename Draw, typename Fn>
void for_each_sample(std::uint64_t seed, std::uint64_t begin, std::uint64_t end, Draw&& draw, Fn&& fn)
{
    std::uint64_t i = begin;
    while (i < end) {
        const std::uint64_t stream = i / kSamplesPerStream;
        Rng rng = Rng::substream(seed, stream);
        for (std::uint64_t k = stream * kSamplesPerStream; k < i; ++k) (void)draw(rng);
        const std::uint64_t stop = std::min(end, (stream + 1) * kSamplesPerStream);
        for (; i < stop; ++i) fn(i, draw(rng));
    }
}

struct Moments {
    specfun::CompensatedSum sum;
    specfun::CompensatedSum sum_sq;

    void add(double x)
    {
        sum.add(x);
        sum_sq.add(x * x);
    }

    void merge(const Moments& o)
    {
        sum.merge(o.sum);
        sum_sq.merge(o.sum_sq);
    }

    Estimate finish(std::uint64_t n) const
    {
        Estimate e;
        e.n = n;
        const double nn = static_cast<double>(n);
        e.mean = sum.value() / nn;
        const double var = std::max(0.0, (sum_sq.value() - sum.value() * e.mean) / (nn - 1.0));
        e.std_error = std::sqrt(var / nn);
        return e;
    }
};

} // namespace

Metric Metric::outage(double gamma_th)
{
    Metric m;
    m.kind = MetricKind::op;
    m.gamma_th = gamma_th;
    return m;
}

Metric Metric::ber(double p, double q)
{
    Metric m;
    m.kind = MetricKind::ber;
    m.p = p;
    m.q = q;
    return m;
}

Metric Metric::capacity()
{
    Metric m;
    m.kind = MetricKind::capacity;
    return m;
}

Metric Metric::moment(int n)
{
    Metric m;
    m.kind = MetricKind::moment;
    m.n = n;
    return m;
}

Metric Metric::mgf(double s)
{
    Metric m;
    m.kind = MetricKind::mgf;
    m.s = s;
    return m;
}

std::string to_string(const Metric& metric)
{
    switch (metric.kind) {
    case MetricKind::op: return "op";
    case MetricKind::ber: return "ber";
    case MetricKind::capacity: return "capacity";
    case MetricKind::moment: return "moment";
    case MetricKind::mgf: return "mgf";
    }
    return "unknown";
}

double statistic(const Metric& metric, double gamma)
{
    switch (metric.kind) {
    case MetricKind::op: return gamma < metric.gamma_th ? 1.0 : 0.0;
    case MetricKind::ber: return 0.5 * boost::math::gamma_q(metric.p, metric.q * gamma);
    case MetricKind::capacity: return std::log1p(gamma) / std::numbers::ln2;
    case MetricKind::moment: return std::pow(gamma, metric.n);
    case MetricKind::mgf: return std::exp(-metric.s * gamma);
    }
    return 0.0;
}

std::vector<Estimate> estimate_metrics(const SimPlan& plan, const std::vector<Metric>& metrics)
{
    validate(plan);
    for (const auto& m : metrics) {
        require(m.kind != MetricKind::ber || (m.p > 0.0 && m.q > 0.0), "simulation: BER needs p, q > 0");
        require(m.kind != MetricKind::moment || m.n >= 1, "simulation: moment order must be >= 1");
        require(m.kind != MetricKind::mgf || m.s >= 0.0, "simulation: MGF needs s >= 0");
    }
    std::vector<Moments> total(metrics.size());
    const E2eSampler draw(plan);
    for (std::uint64_t b = 0; b < plan.n_samples; b += plan.batch) {
        const std::uint64_t e = std::min(plan.n_samples, b + plan.batch);
        std::vector<Moments> block(metrics.size());
        for_each_sample(plan.seed, b, e, draw, [&](std::uint64_t, double g) {
            for (std::size_t k = 0; k < metrics.size(); ++k) block[k].add(statistic(metrics[k], g));
        });
        for (std::size_t k = 0; k < metrics.size(); ++k) total[k].merge(block[k]);
    }
    std::vector<Estimate> out;
    for (const auto& t : total) out.push_back(t.finish(plan.n_samples));
    return out;
}

Estimate estimate_metric(const SimPlan& plan, const Metric& metric)
{
    return estimate_metrics(plan, {metric}).front();
}

std::vector<double> draw_e2e(const SimPlan& plan)
{
    validate(plan);
    std::vector<double> out(plan.n_samples);
    for_each_sample(plan.seed, 0, plan.n_samples, E2eSampler(plan),
                    [&](std::uint64_t i, double g) { out[i] = g; });
    return out;
}

std::vector<double> draw_gamma1(const channels::RfHop& rf, std::uint64_t n, std::uint64_t seed)
{
    channels::validate(rf);
    std::vector<double> out(n);
    for_each_sample(seed, 0, n, [&](Rng& rng) { return sample_gamma1(rf, rng); },
                    [&](std::uint64_t i, double g) { out[i] = g; });
    return out;
}

std::vector<double> draw_gamma2(const channels::FsoHop& fso, std::uint64_t n, std::uint64_t seed)
{
    channels::validate(fso);
    std::vector<double> out(n);
    for_each_sample(seed, 0, n, FsoSampler(fso),
                    [&](std::uint64_t i, double g) { out[i] = g; });
    return out;
}

double kolmogorov_pvalue(double d, std::uint64_t n)
{
    const double sn = std::sqrt(static_cast<double>(n));
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    if (lambda < 0.2) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf, std::size_t nodes)
{
    require(samples.size() >= 2, "KS test: need at least two samples");
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    nodes = std::clamp<std::size_t>(nodes, 2, n);

    std::vector<std::size_t> idx(nodes);
    std::vector<double> fv(nodes);
    for (std::size_t k = 0; k < nodes; ++k) {
        idx[k] = static_cast<std::size_t>(std::llround(static_cast<double>(k) * static_cast<double>(n - 1) /
                                                       static_cast<double>(nodes - 1)));
        fv[k] = cdf(samples[idx[k]]);
    }

    KsResult res;
    res.n = n;
    const double nn = static_cast<double>(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k + 1 < nodes && idx[k + 1] <= i) ++k;
        double f;
        if (i == idx[k]) {
            f = fv[k];
        } else {
            const std::size_t k1 = std::min(k + 1, nodes - 1);
            const double x0 = samples[idx[k]];
            const double x1 = samples[idx[k1]];
            f = x1 > x0 ? fv[k] + (fv[k1] - fv[k]) * (samples[i] - x0) / (x1 - x0) : fv[k];
        }
        const double di = static_cast<double>(i);
        res.statistic = std::max({res.statistic, f - di / nn, (di + 1.0) / nn - f});
    }
    for (std::size_t j = 1; j < nodes; ++j) res.resolution = std::max(res.resolution, fv[j] - fv[j - 1]);
    res.p_value = kolmogorov_pvalue(res.statistic, n);
    return res;
}

} // namespace rfso::mcsim
