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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "oracles.hpp"
#include "rfso/error.hpp"
#include "rfso/mcsim.hpp"

using namespace rfso::mcsim;
using oracle::scenario;
using rfso::channels::Turbulence;

namespace {

struct Stats {
    double mean = 0.0;
    double var = 0.0;
    double m4 = 0.0; // fourth central moment
};

Stats stats(const std::vector<double>& xs)
{
    Stats s;
    const double n = static_cast<double>(xs.size());
    for (double x : xs) s.mean += x;
    s.mean /= n;
    for (double x : xs) {
        const double d = (x - s.mean) * (x - s.mean);
        s.var += d;
        s.m4 += d * d;
    }
    s.var /= n - 1.0;
    s.m4 /= n;
    return s;
}

double quantile(std::vector<double> xs, double p)
{
    const auto k = static_cast<std::size_t>(p * static_cast<double>(xs.size() - 1));
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k), xs.end());
    return xs[k];
}

} // namespace

TEST_CASE("generator streams")
{
    Rng a(7), b(7), c(8);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        CHECK(x == b.next());
        CHECK(x != c.next());
    }
    Rng s0 = Rng::substream(7, 0), s1 = Rng::substream(7, 1), s0b = Rng::substream(7, 0);
    CHECK(s0.next() != s1.next());
    s0 = Rng::substream(7, 0);
    CHECK(s0.next() == s0b.next());
    Rng u(3);
    for (int i = 0; i < 100000; ++i) {
        const double v = u.uniform();
        REQUIRE(v > 0.0);
        REQUIRE(v < 1.0);
    }
}

TEST_CASE("gamma sampler moments")
{
    for (double shape : {0.5, 1.342, 2.0, 7.0}) {
        Rng rng(11);
        std::vector<double> xs(400000);
        for (auto& x : xs) x = sample_gamma(shape, 3.0, rng);
        const Stats s = stats(xs);
        const double n = static_cast<double>(xs.size());
        const double var = shape * 9.0;
        INFO("shape = " << shape);
        CHECK(std::abs(s.mean - shape * 3.0) < 3.0 * std::sqrt(var / n));
        const double m4 = var * var * (3.0 + 6.0 / shape);
        CHECK(std::abs(s.var - var) < 3.0 * std::sqrt((m4 - var * var) / n));
    }
}

TEST_CASE("RF hop draws follow the Nakagami SNR law")
{
    const rfso::channels::RfHop rf{2, 100.0};
    const auto xs = draw_gamma1(rf, 1'000'000, 5);
    const Stats s = stats(xs);
    const double n = static_cast<double>(xs.size());
    CHECK(std::abs(s.mean - 100.0) < 3.0 * std::sqrt(s.var / n));
    const double var = 100.0 * 100.0 / 2.0;
    CHECK(std::abs(s.var - var) < 3.0 * std::sqrt((var * var * 6.0) / n));
    const KsResult ks = ks_test(xs, [&](double g) { return rfso::channels::nakagami_snr_cdf(rf, g); });
    CHECK(ks.p_value > 0.01);
}

TEST_CASE("FSO hop draws follow the closed-form law")
{
    for (int r : {1, 2}) {
        for (double xi : {1.0, 6.7}) {
            const auto cfg = scenario(2, 10.0, Turbulence::moderate, xi, r, 10.0);
            const auto xs = draw_gamma2(cfg.fso, 200'000, 9);
            const KsResult ks = ks_test(xs, [&](double g) { return rfso::channels::fso_snr_cdf(cfg.fso, g); });
            INFO("r = " << r << ", xi = " << xi << ", D = " << ks.statistic);
            CHECK(ks.p_value > 0.01);
            CHECK(ks.resolution < 1e-3);
            if (r == 1) {
                const Stats s = stats(xs);
                CHECK(std::abs(s.mean - 10.0) < 3.0 * std::sqrt(s.var / static_cast<double>(xs.size())));
            }
        }
    }
}

TEST_CASE("narrow pointing jitter leaves pure Gamma-Gamma fading")
{
    auto cfg = scenario(2, 10.0, Turbulence::strong, 30.0, 1, 0.0);
    const auto xs = draw_gamma2(cfg.fso, 1'000'000, 13);
    Rng rng(17);
    std::vector<double> gg(1'000'000);
    for (auto& v : gg) v = sample_gamma(cfg.fso.alpha, 1.0 / cfg.fso.alpha, rng) * sample_gamma(cfg.fso.beta, 1.0 / cfg.fso.beta, rng);
    for (double p : {0.1, 0.5, 0.9}) CHECK(oracle::rel_err(quantile(xs, p), quantile(gg, p)) < 1e-2);
}

TEST_CASE("end-to-end draws")
{
    const auto cfg = scenario(2, 10.0, Turbulence::strong, 1.1, 1, 10.0);
    const SimPlan plan{cfg, 1000, 21, 64};
    Rng a(99), b(99);
    for (int i = 0; i < 10000; ++i) {
        const double g1 = sample_gamma1(cfg.rf, a);
        (void)sample_gamma2(cfg.fso, a);
        REQUIRE(sample_e2e(plan, b) < g1);
    }

    auto tiny = plan;
    tiny.cfg.c_gain = 1e-9;
    Rng c(5), d(5);
    for (int i = 0; i < 1000; ++i) {
        const double g1 = sample_gamma1(cfg.rf, c);
        (void)sample_gamma2(cfg.fso, c);
        CHECK(oracle::rel_err(sample_e2e(tiny, d), g1) < 1e-6);
    }
}

TEST_CASE("empirical CDF against the closed form")
{
    for (int r : {1, 2}) {
        const auto cfg = scenario(2, 10.0, Turbulence::strong, 1.1, r, 10.0);
        const SimPlan plan{cfg, 400'000, 3, 65536};
        for (double g : {0.2, 1.0, 5.0, 20.0}) {
            const Estimate e = estimate_metric(plan, Metric::outage(g));
            const double f = rfso::relay::e2e_cdf(cfg, g).value;
            const double se = std::sqrt(f * (1.0 - f) / static_cast<double>(plan.n_samples));
            INFO("r = " << r << ", gamma = " << g);
            CHECK(std::abs(e.mean - f) < 3.0 * se);
        }
    }
}

TEST_CASE("metric estimates against closed forms")
{
    const auto cfg = scenario(2, 20.0, Turbulence::strong, 1.1, 2, 10.0);
    const SimPlan plan{cfg, 1'000'000, 42, 65536};
    const std::vector<Metric> ms = {Metric::outage(0.0), Metric::ber(1.0, 1.0), Metric::capacity(),
                                    Metric::moment(1), Metric::mgf(0.5)};
    const auto est = estimate_metrics(plan, ms);
    CHECK(est[0].mean == 0.0);
    CHECK(est[0].std_error == 0.0);
    CHECK(std::abs(est[1].mean - rfso::relay::average_ber(cfg, {}).value) < 3.0 * est[1].std_error);
    CHECK(std::abs(est[2].mean - rfso::relay::ergodic_capacity(cfg).value) < 3.0 * est[2].std_error);
    CHECK(std::abs(est[3].mean - rfso::relay::e2e_moment(cfg, 1).value) < 3.0 * est[3].std_error);
    CHECK(std::abs(est[4].mean - rfso::relay::e2e_mgf(cfg, 0.5).value) < 3.0 * est[4].std_error);
    CHECK(to_string(ms[2]) == "capacity");
    CHECK(statistic(Metric::ber(1.0, 1.0), 2.0) == doctest::Approx(0.5 * std::exp(-2.0)).epsilon(1e-15));
}

TEST_CASE("estimates are reproducible and independent of the batch size")
{
    const auto cfg = scenario(2, 10.0, Turbulence::weak, 1.1, 1, 10.0);
    SimPlan plan{cfg, 50'000, 77, 65536};
    const Estimate a = estimate_metric(plan, Metric::capacity());
    const Estimate b = estimate_metric(plan, Metric::capacity());
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    for (std::uint64_t batch : {7ULL, 1000ULL, 4096ULL}) {
        plan.batch = batch;
        const Estimate c = estimate_metric(plan, Metric::capacity());
        CHECK(oracle::rel_err(c.mean, a.mean) < 1e-12);
        CHECK(oracle::rel_err(c.std_error, a.std_error) < 1e-12);
        CHECK(c.n == 50'000);
    }
    plan.seed = 78;
    CHECK(estimate_metric(plan, Metric::capacity()).mean != a.mean);

    const auto d1 = draw_e2e(plan);
    const auto d2 = draw_e2e(plan);
    CHECK(d1 == d2);
}

TEST_CASE("KS helpers")
{
    CHECK(kolmogorov_pvalue(0.0, 1000) == 1.0);
    // λ ≈ 1.358 and 1.628 are the 5% and 1% points.
    CHECK(kolmogorov_pvalue(1.358 / std::sqrt(1e6), 1'000'000) == doctest::Approx(0.05).epsilon(0.02));
    CHECK(kolmogorov_pvalue(1.628 / std::sqrt(1e6), 1'000'000) == doctest::Approx(0.01).epsilon(0.02));

    Rng rng(1);
    std::vector<double> u(100000);
    for (auto& x : u) x = rng.uniform();
    CHECK(ks_test(u, [](double x) { return x; }).p_value > 0.01);
    CHECK(ks_test(u, [](double x) { return x * x; }).p_value < 1e-6);
    const KsResult exact = ks_test(u, [](double x) { return x; }, u.size());
    CHECK(exact.statistic == doctest::Approx(ks_test(u, [](double x) { return x; }).statistic).epsilon(1e-3));
}

TEST_CASE("plan validation")
{
    const auto cfg = scenario(2, 10.0, Turbulence::weak, 1.1, 1, 10.0);
    CHECK_THROWS_AS(validate(SimPlan{cfg, 999, 1, 10}), rfso::InvalidInput);
    CHECK_THROWS_AS(validate(SimPlan{cfg, 1000, 1, 0}), rfso::InvalidInput);
    CHECK_THROWS_AS(estimate_metric(SimPlan{cfg, 1000, 1, 10}, Metric::moment(0)), rfso::InvalidInput);
}
