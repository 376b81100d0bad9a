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

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "rfso/error.hpp"
#include "rfso/relay.hpp"

using namespace rfso::relay;
using oracle::rel_err;
using oracle::scenario;
using rfso::channels::Turbulence;

namespace {

std::vector<RelayConfig> fig_matrix(int m = 2)
{
    std::vector<RelayConfig> out;
    for (Turbulence t : {Turbulence::weak, Turbulence::moderate, Turbulence::strong})
        for (int r : {1, 2}) out.push_back(scenario(m, 10.0, t, 1.1, r, 10.0));
    return out;
}

} // namespace

TEST_CASE("CDF boundary values and monotonicity")
{
    for (const auto& cfg : fig_matrix()) {
        CHECK(e2e_cdf(cfg, 0.0).value == 0.0);
        CHECK(e2e_ccdf(cfg, 0.0).value == 1.0);
        double prev = 0.0;
        for (double g = 0.05; g < 200.0; g *= 1.4) {
            const double v = e2e_cdf(cfg, g).value;
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            CHECK(v > prev);
            prev = v;
        }
        CHECK(e2e_cdf(cfg, 1.0).value == outage_probability(cfg, 1.0).value);
    }
}

TEST_CASE("PDF is the derivative of the CDF")
{
    for (const auto& cfg : fig_matrix()) {
        double worst = 0.0;
        for (int i = 1; i <= 20; ++i) {
            const double g = 0.25 * i;
            const double h = 1e-4 * g;
            const double fd = (e2e_cdf(cfg, g + h).value - e2e_cdf(cfg, g - h).value) / (2.0 * h);
            worst = std::max(worst, std::abs(fd - e2e_pdf(cfg, g).value));
        }
        CHECK(worst < 1e-5);
    }
}

TEST_CASE("PDF normalisation and first two moments")
{
    for (const auto& cfg : fig_matrix()) {
        CHECK(oracle::pdf_integral(cfg, [](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-6));
        const double m1 = oracle::pdf_integral(cfg, [](double g) { return g; });
        CHECK(rel_err(e2e_moment(cfg, 1).value, m1) < 1e-6);
        const double m2 = oracle::pdf_integral(cfg, [](double g) { return g * g; });
        CHECK(rel_err(e2e_moment(cfg, 2).value, m2) < 1e-6);
    }
}

TEST_CASE("MGF from the CDF")
{
    for (const auto& cfg : fig_matrix()) {
        CHECK(e2e_mgf(cfg, 0.0).value == 1.0);
        double prev = 1.0;
        for (double s : {0.1, 1.0, 10.0}) {
            const double want =
                s * oracle::integrate_half_line([&](double g) { return std::exp(-s * g) * e2e_cdf(cfg, g).value; });
            const double got = e2e_mgf(cfg, s).value;
            CHECK(rel_err(got, want) < 1e-6);
            CHECK(got < prev);
            CHECK(got > 0.0);
            prev = got;
        }
    }
}

TEST_CASE("average BER against the conditional error probability")
{
    const auto cfg = scenario(2, 20.0, Turbulence::strong, 1.1, 1, 10.0);
    const BinaryModulation dbpsk = BinaryModulation::dbpsk();
    CHECK(dbpsk.p == 1.0);
    CHECK(dbpsk.q == 1.0);
    CHECK(rel_err(average_ber(cfg, dbpsk).value, 0.5 * e2e_mgf(cfg, 1.0).value) < 1e-12);

    for (const BinaryModulation mod : {BinaryModulation{0.5, 1.0}, BinaryModulation{1.0, 0.5}, BinaryModulation{2.0, 0.7}}) {
        const double want = oracle::pdf_integral(cfg, [&](double g) { return oracle::conditional_ber(mod.p, mod.q, g); });
        CHECK(rel_err(average_ber(cfg, mod).value, want) < 1e-6);
    }
}

TEST_CASE("BER tends to one half as the RF hop fades out")
{
    auto cfg = scenario(2, -20.0, Turbulence::strong, 1.1, 2, 10.0);
    double prev = 0.0;
    for (double db = -20.0; db <= 20.0; db += 5.0) {
        cfg.rf.omega = rfso::channels::db_to_linear(db);
        const double v = average_ber(cfg, BinaryModulation::dbpsk()).value;
        if (db > -20.0) CHECK(v < prev);
        CHECK(v < 0.5);
        prev = v;
    }
    cfg.rf.omega = 1e-4;
    CHECK(average_ber(cfg, BinaryModulation::dbpsk()).value == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("amount of fading")
{
    for (const auto& cfg : fig_matrix()) {
        CHECK(amount_of_fading(cfg, 1).value == 0.0);
        const double af2 = amount_of_fading(cfg, 2).value;
        CHECK(af2 >= 0.0);
        const double m1 = e2e_moment(cfg, 1).value;
        CHECK(rel_err(af2, e2e_moment(cfg, 2).value / (m1 * m1) - 1.0) < 1e-12);
    }
}

TEST_CASE("single-term collapse for a Rayleigh RF hop")
{
    for (int r : {1, 2}) {
        const auto cfg = scenario(1, 10.0, Turbulence::strong, 1.1, r, 10.0);
        const oracle::Collapsed ref{cfg};
        for (double g : {0.3, 1.0, 6.0}) {
            CHECK(rel_err(e2e_cdf(cfg, g).value, ref.cdf(g)) < 1e-12);
            CHECK(rel_err(e2e_pdf(cfg, g).value, ref.pdf(g)) < 1e-12);
        }
        CHECK(rel_err(e2e_mgf(cfg, 0.7).value, ref.mgf(0.7)) < 1e-12);
        CHECK(rel_err(e2e_moment(cfg, 1).value, ref.moment(1)) < 1e-12);
        CHECK(rel_err(e2e_moment(cfg, 3).value, ref.moment(3)) < 1e-12);
        CHECK(rel_err(average_ber(cfg, {1.0, 1.0}).value, ref.ber(1.0, 1.0)) < 1e-12);
        CHECK(rel_err(ergodic_capacity(cfg).value, ref.capacity()) < 1e-12);
    }
}

TEST_CASE("capacity paths agree")
{
    for (double xi : {1.0, 6.7}) {
        for (int r : {1, 2}) {
            const auto cfg = scenario(2, 10.0, Turbulence::strong, xi, r, 15.0);
            const MetricResult e = ergodic_capacity(cfg, CapacityPath::egbmgf);
            const MetricResult q = ergodic_capacity(cfg, CapacityPath::quadrature);
            CHECK(e.path == MetricPath::egbmgf);
            CHECK(q.path == MetricPath::quadrature);
            CHECK(rel_err(e.value, q.value) < 1e-4);
            CHECK(e.value > 0.0);
        }
    }
}

TEST_CASE("heterodyne detection is never worse")
{
    for (double omega_db = 0.0; omega_db <= 40.0; omega_db += 10.0) {
        const auto het = scenario(2, omega_db, Turbulence::moderate, 1.1, 1, 10.0);
        const auto imdd = scenario(2, omega_db, Turbulence::moderate, 1.1, 2, 10.0);
        CHECK(outage_probability(het, 1.0).value <= outage_probability(imdd, 1.0).value);
        CHECK(average_ber(het, {}).value <= average_ber(imdd, {}).value);
        CHECK(ergodic_capacity(het).value >= ergodic_capacity(imdd).value);
    }
}

TEST_CASE("asymptotic CDF matches the explicit leading terms")
{
    for (int r : {1, 2}) {
        const auto cfg = scenario(1, 20.0, Turbulence::strong, 1.1, r, 40.0);
        const oracle::Collapsed ref{cfg};
        const MetricResult a = e2e_cdf_asymptotic(cfg, 1.0, {});
        CHECK(a.path == MetricPath::asymptotic_all_terms);
        CHECK(rel_err(a.value, ref.cdf_asymptotic(1.0)) < 1e-12);
        CHECK(a.error_estimate == doctest::Approx(std::abs(a.value - e2e_cdf(cfg, 1.0).value)));
    }
}

TEST_CASE("asymptotic forms converge to the exact metrics")
{
    for (int r : {1, 2}) {
        auto cfg = scenario(1, 20.0, Turbulence::strong, 1.1, r, 0.0);
        double prev_cdf = 1e9, prev_mgf = 1e9, prev_ber = 1e9;
        for (double db = 40.0; db <= 70.0; db += 10.0) {
            cfg.fso.gamma2_bar = rfso::channels::db_to_linear(db);
            const double ec = e2e_cdf_asymptotic(cfg, 1.0, {}).error_estimate / e2e_cdf(cfg, 1.0).value;
            const double em = e2e_mgf_asymptotic(cfg, 1.0, {}).error_estimate / e2e_mgf(cfg, 1.0).value;
            const double eb = average_ber_asymptotic(cfg, {}, {}).error_estimate / average_ber(cfg, {}).value;
            CHECK(ec < prev_cdf);
            CHECK(em < prev_mgf);
            CHECK(eb < prev_ber);
            prev_cdf = ec;
            prev_mgf = em;
            prev_ber = eb;
        }
        CHECK(prev_cdf < 1e-2);
        CHECK(prev_mgf < 1e-2);
        CHECK(prev_ber < 1e-2);
    }
    CHECK(e2e_mgf_asymptotic(scenario(2, 20.0, Turbulence::strong, 1.1, 1, 30.0), 0.0, {}).value == 1.0);
}

TEST_CASE("asymptotic BER shares the RF-limited floor")
{
    for (int r : {1, 2}) {
        const auto cfg = scenario(2, 20.0, Turbulence::strong, 1.1, r, 80.0);
        const double exact = average_ber(cfg, {}).value;
        CHECK(exact > 0.0);
        CHECK(rel_err(average_ber_asymptotic(cfg, {}, {}).value, exact) < 1e-2);
        // Both land on the RF-only BER 1/2 (1 + Ω/m)^-m for DBPSK.
        const double floor = 0.5 / std::pow(1.0 + 100.0 / 2.0, 2.0);
        const auto far = scenario(2, 20.0, Turbulence::strong, 1.1, r, 200.0);
        CHECK(rel_err(average_ber(far, {}).value, floor) < 1e-6);
        CHECK(rel_err(average_ber_asymptotic(far, {}, {}).value, floor) < 1e-6);
    }
}

TEST_CASE("dominant-term asymptotics")
{
    for (int r : {1, 2}) {
        auto cfg = scenario(1, 20.0, Turbulence::strong, 1.1, r, 0.0);
        for (DominantTerm dt : {DominantTerm::smallest_exponent, DominantTerm::j_slot}) {
            const AsymptoticMode mode{true, dt};
            cfg.fso.gamma2_bar = 1e4;
            const double e_lo = e2e_cdf_asymptotic(cfg, 1.0, mode).error_estimate;
            cfg.fso.gamma2_bar = 1e8;
            const MetricResult hi = e2e_cdf_asymptotic(cfg, 1.0, mode);
            CHECK(hi.path == MetricPath::asymptotic_dominant);
            CHECK(hi.terms_used == 1);
            CHECK(hi.error_estimate < e_lo);
        }
    }
}

TEST_CASE("coinciding parameters contribute nothing to the asymptotic sum")
{
    // For IM/DD the value (ξ²+1)/2 sits in both parameter vectors.
    const auto cfg = scenario(1, 20.0, Turbulence::strong, 1.1, 2, 40.0);
    const oracle::Collapsed ref{cfg};
    REQUIRE(ref.k.kappa1[0] == ref.k.kappa2[1]);
    CHECK(std::isfinite(e2e_cdf_asymptotic(cfg, 1.0, {}).value));
    CHECK(rel_err(e2e_cdf_asymptotic(cfg, 1.0, {}).value, ref.cdf_asymptotic(1.0)) < 1e-12);
}

TEST_CASE("integer-spaced parameters in the asymptotic sum")
{
    // ξ = 1 puts ξ² and the j slot one apart.
    auto cfg = scenario(2, 20.0, Turbulence::strong, 1.0, 2, 0.0);
    double prev = 1e9;
    for (double db = 50.0; db <= 80.0; db += 10.0) {
        cfg.fso.gamma2_bar = rfso::channels::db_to_linear(db);
        const MetricResult a = e2e_cdf_asymptotic(cfg, 1.0, {});
        CHECK(std::isfinite(a.value));
        CHECK(a.error_estimate < prev);
        prev = a.error_estimate;
    }
}

TEST_CASE("invalid arguments")
{
    const auto cfg = scenario(2, 10.0, Turbulence::strong, 1.1, 1, 10.0);
    CHECK_THROWS_AS(e2e_cdf(cfg, -1.0), rfso::InvalidInput);
    CHECK_THROWS_AS(e2e_pdf(cfg, 0.0), rfso::InvalidInput);
    CHECK_THROWS_AS(e2e_mgf(cfg, -0.5), rfso::InvalidInput);
    CHECK_THROWS_AS(e2e_moment(cfg, 0), rfso::InvalidInput);
    CHECK_THROWS_AS(amount_of_fading(cfg, 0), rfso::InvalidInput);
    CHECK_THROWS_AS(average_ber(cfg, {0.0, 1.0}), rfso::InvalidInput);
    auto bad = cfg;
    bad.c_gain = 0.0;
    CHECK_THROWS_AS(e2e_cdf(bad, 1.0), rfso::InvalidInput);
    CHECK(to_string(MetricPath::egbmgf) == "egbmgf");
}
