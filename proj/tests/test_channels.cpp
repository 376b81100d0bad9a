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
#include <limits>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "rfso/channels.hpp"
#include "rfso/error.hpp"

using namespace rfso::channels;

namespace {

FsoHop hop(Turbulence t, double xi, int r, double gbar)
{
    const auto p = preset(t);
    return {p.alpha, p.beta, xi, *detection_from_order(r), gbar};
}

double integrate_pdf(const FsoHop& h, double lo, double hi)
{
    boost::math::quadrature::tanh_sinh<double> q;
    return q.integrate([&](double g) { return fso_snr_pdf(h, g); }, lo, hi, 1e-11);
}

} // namespace

TEST_CASE("dB conversions")
{
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(linear_to_db(100.0) == doctest::Approx(20.0).epsilon(1e-15));
    CHECK(linear_to_db(db_to_linear(-7.3)) == doctest::Approx(-7.3).epsilon(1e-14));
}

TEST_CASE("turbulence presets")
{
    CHECK(preset(Turbulence::weak).alpha == 2.902);
    CHECK(preset(Turbulence::weak).beta == 2.51);
    CHECK(preset(Turbulence::moderate).alpha == 2.296);
    CHECK(preset(Turbulence::moderate).beta == 1.822);
    CHECK(preset(Turbulence::strong).alpha == 2.064);
    CHECK(preset(Turbulence::strong).beta == 1.342);
    CHECK(parse_turbulence("strong") == Turbulence::strong);
    CHECK_FALSE(parse_turbulence("calm").has_value());
    CHECK(detection_from_order(2) == Detection::im_dd);
    CHECK_FALSE(detection_from_order(3).has_value());
}

TEST_CASE("hop validation")
{
    CHECK_THROWS_AS(validate(RfHop{0, 1.0}), rfso::InvalidInput);
    CHECK_THROWS_AS(validate(RfHop{51, 1.0}), rfso::InvalidInput);
    CHECK_THROWS_AS(validate(RfHop{2, 0.0}), rfso::InvalidInput);
    CHECK_NOTHROW(validate(RfHop{50, 3.0}));

    FsoHop h = hop(Turbulence::strong, 1.1, 1, 10.0);
    CHECK_NOTHROW(validate(h));
    h.alpha = -1.0;
    CHECK_THROWS_AS(validate(h), rfso::InvalidInput);
    h = hop(Turbulence::strong, 40.0, 1, 10.0);
    CHECK_THROWS_AS(validate(h), rfso::InvalidInput);
    h = hop(Turbulence::strong, 1.1, 1, 0.0);
    CHECK_THROWS_AS(validate(h), rfso::InvalidInput);
    h = hop(Turbulence::strong, 1.1, 1, 10.0);
    h.detection = static_cast<Detection>(3);
    CHECK_THROWS_AS(validate(h), rfso::InvalidInput);
}

TEST_CASE("derived FSO constants")
{
    const FsoHop het = hop(Turbulence::strong, 1.1, 1, 10.0);
    const auto d1 = derive_fso(het);
    const double xi2 = 1.21;
    CHECK(d1.h == doctest::Approx(xi2 / (xi2 + 1.0)).epsilon(1e-15));
    CHECK(d1.mu_r == 10.0);
    CHECK(d1.A == doctest::Approx(xi2 / (std::tgamma(2.064) * std::tgamma(1.342))).epsilon(1e-14));
    CHECK(d1.B == doctest::Approx(d1.h * 2.064 * 1.342).epsilon(1e-14));

    const FsoHop imdd = hop(Turbulence::strong, 1.1, 2, 10.0);
    const auto d2 = derive_fso(imdd);
    CHECK(d2.mu_r == doctest::Approx(10.0 * 2.064 * 1.342 * xi2 * (xi2 + 2.0) /
                                     (3.064 * 2.342 * (xi2 + 1.0) * (xi2 + 1.0)))
                         .epsilon(1e-14));
    const double h = xi2 / (xi2 + 1.0);
    CHECK(d2.B == doctest::Approx(std::pow(h * 2.064 * 1.342, 2) / 16.0).epsilon(1e-14));
    CHECK(d2.A == doctest::Approx(std::pow(2.0, 2.064 + 1.342 - 2.0) * xi2 /
                                  (2.0 * std::numbers::pi * std::tgamma(2.064) * std::tgamma(1.342)))
                      .epsilon(1e-14));

    const auto k = build_kappas(imdd, 1);
    REQUIRE(k.kappa1.size() == 2);
    REQUIRE(k.kappa2.size() == 7);
    CHECK(k.kappa1[0] == doctest::Approx((xi2 + 1.0) / 2.0));
    CHECK(k.kappa1[1] == doctest::Approx((xi2 + 2.0) / 2.0));
    CHECK(k.kappa2[0] == doctest::Approx(xi2 / 2.0));
    CHECK(k.kappa2[1] == doctest::Approx((xi2 + 1.0) / 2.0));
    CHECK(k.kappa2[2] == doctest::Approx(2.064 / 2.0));
    CHECK(k.kappa2[5] == doctest::Approx(2.342 / 2.0));
    CHECK(k.kappa2[6] == 1.0);
}

TEST_CASE("Nakagami SNR law")
{
    const RfHop rayleigh{1, 4.0};
    const RfHop naka{2, 4.0};
    for (double g : {0.1, 1.0, 7.0}) {
        CHECK(nakagami_snr_cdf(rayleigh, g) == doctest::Approx(1.0 - std::exp(-g / 4.0)).epsilon(1e-14));
        const double x = 2.0 * g / 4.0;
        CHECK(nakagami_snr_cdf(naka, g) == doctest::Approx(1.0 - std::exp(-x) * (1.0 + x)).epsilon(1e-14));
        CHECK(nakagami_snr_pdf(naka, g) == doctest::Approx(x * std::exp(-x) * 2.0 / 4.0).epsilon(1e-14));
    }
    CHECK(nakagami_snr_cdf(naka, 0.0) == 0.0);
}

TEST_CASE("FSO SNR law against high-precision values")
{
    struct Case {
        Turbulence t;
        double xi;
        int r;
        double g;
        double pdf;
        double cdf;
    };
    const Case cases[] = {
        {Turbulence::strong, 1.1, 1, 3.0, 0.080002717061423807197, 0.37888910305095274245},
        {Turbulence::strong, 1.1, 2, 3.0, 0.044197138757032571179, 0.69734974556557447981},
        {Turbulence::weak, 6.7, 2, 25.0, 0.0044585396767542892785, 0.90334998214997759789},
        {Turbulence::moderate, 1.0, 1, 0.5, 0.15134703152517448447, 0.08469694052448472138},
    };
    for (const auto& c : cases) {
        const FsoHop h = hop(c.t, c.xi, c.r, 10.0);
        CHECK(fso_snr_pdf(h, c.g) == doctest::Approx(c.pdf).epsilon(1e-11));
        CHECK(fso_snr_cdf(h, c.g) == doctest::Approx(c.cdf).epsilon(1e-11));
    }
}

TEST_CASE("FSO CDF is the integral of the PDF")
{
    for (Turbulence t : {Turbulence::weak, Turbulence::moderate, Turbulence::strong}) {
        for (int r : {1, 2}) {
            for (double xi : {1.0, 1.1, 6.7}) {
                const FsoHop h = hop(t, xi, r, 10.0);
                INFO("r = " << r << ", xi = " << xi);
                for (double g : {0.2, 4.0, 30.0})
                    CHECK(fso_snr_cdf(h, g) == doctest::Approx(integrate_pdf(h, 0.0, g)).epsilon(1e-8));
                CHECK(fso_snr_cdf(h, 0.0) == 0.0);
            }
        }
    }
}

TEST_CASE("FSO PDF normalisation and heterodyne mean")
{
    boost::math::quadrature::tanh_sinh<double> q;
    for (Turbulence t : {Turbulence::weak, Turbulence::strong}) {
        for (double xi : {1.1, 6.7}) {
            const FsoHop het = hop(t, xi, 1, 10.0);
            const double inf = std::numeric_limits<double>::infinity();
            CHECK(integrate_pdf(het, 0.0, inf) == doctest::Approx(1.0).epsilon(1e-8));
            const double mean = q.integrate([&](double g) { return g * fso_snr_pdf(het, g); }, 0.0, inf, 1e-10);
            CHECK(mean == doctest::Approx(10.0).epsilon(1e-7));
        }
    }
}

TEST_CASE("FSO PDF rejects non-positive SNR")
{
    const FsoHop h = hop(Turbulence::strong, 1.1, 1, 10.0);
    CHECK_THROWS_AS(fso_snr_pdf(h, 0.0), rfso::InvalidInput);
    CHECK_THROWS_AS(fso_snr_cdf(h, -1.0), rfso::InvalidInput);
}
