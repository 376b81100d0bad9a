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

#include "rfso/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "rfso/error.hpp"
#include "rfso/specfun/meijer_g.hpp"

namespace rfso::channels {

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double lin)
{
    return 10.0 * std::log10(lin);
}

int order(Detection d)
{
    return static_cast<int>(d);
}

std::optional<Detection> detection_from_order(int r)
{
    if (r == 1) return Detection::heterodyne;
    if (r == 2) return Detection::im_dd;
    return std::nullopt;
}

TurbulencePreset preset(Turbulence t)
{
    switch (t) {
    case Turbulence::weak: return {"weak", 2.902, 2.51};
    case Turbulence::moderate: return {"moderate", 2.296, 1.822};
    case Turbulence::strong: return {"strong", 2.064, 1.342};
    }
    return {"strong", 2.064, 1.342};
}

std::optional<Turbulence> parse_turbulence(std::string_view label)
{
    if (label == "weak") return Turbulence::weak;
    if (label == "moderate") return Turbulence::moderate;
    if (label == "strong") return Turbulence::strong;
    return std::nullopt;
}

void validate(const RfHop& hop)
{
    require(hop.m >= 1 && hop.m <= kMaxNakagamiM, "RF hop: Nakagami m must be an integer in [1, 50]");
    require(std::isfinite(hop.omega) && hop.omega > 0.0, "RF hop: omega must be positive");
}

void validate(const FsoHop& hop)
{
    require(std::isfinite(hop.alpha) && hop.alpha > 0.0, "FSO hop: alpha must be positive");
    require(std::isfinite(hop.beta) && hop.beta > 0.0, "FSO hop: beta must be positive");
    require(std::isfinite(hop.xi) && hop.xi > 0.0, "FSO hop: xi must be positive");
    require(detection_from_order(order(hop.detection)).has_value(), "FSO hop: detection order must be 1 or 2");
    require(std::isfinite(hop.gamma2_bar) && hop.gamma2_bar > 0.0, "FSO hop: average SNR must be positive");
    if (hop.xi * hop.xi > kMaxXiSquared) {
        std::ostringstream os;
        os << "FSO hop: xi^2 = " << hop.xi * hop.xi << " exceeds " << kMaxXiSquared
           << "; pointing error is negligible here (a dedicated negligible-pointing-error mode is not "
              "available yet)";
        throw InvalidInput(os.str());
    }
}

DerivedFsoParams derive_fso(const FsoHop& hop)
{
    validate(hop);
    const double r = order(hop.detection);
    const double xi2 = hop.xi * hop.xi;
    const double a = hop.alpha;
    const double b = hop.beta;

    DerivedFsoParams d;
    d.h = xi2 / (xi2 + 1.0);
    if (hop.detection == Detection::heterodyne)
        d.mu_r = hop.gamma2_bar;
    else
        d.mu_r = hop.gamma2_bar * a * b * xi2 * (xi2 + 2.0) / ((a + 1.0) * (b + 1.0) * (xi2 + 1.0) * (xi2 + 1.0));
    d.A = std::pow(r, a + b - 2.0) * xi2 /
          (std::pow(2.0 * std::numbers::pi, r - 1.0) * std::tgamma(a) * std::tgamma(b));
    d.B = std::pow(d.h * a * b, r) / std::pow(r, 2.0 * r);
    return d;
}

KappaVectors build_kappas(const FsoHop& hop, int j)
{
    require(j >= 0, "kappa vectors: j must be non-negative");
    const int r = order(hop.detection);
    const double rr = r;
    const double xi2 = hop.xi * hop.xi;
    KappaVectors k;
    for (int i = 1; i <= r; ++i) k.kappa1.push_back((xi2 + i) / rr);
    for (int i = 0; i < r; ++i) k.kappa2.push_back((xi2 + i) / rr);
    for (int i = 0; i < r; ++i) k.kappa2.push_back((hop.alpha + i) / rr);
    for (int i = 0; i < r; ++i) k.kappa2.push_back((hop.beta + i) / rr);
    k.kappa2.push_back(static_cast<double>(j));
    return k;
}

double nakagami_snr_pdf(const RfHop& hop, double g1)
{
    validate(hop);
    require(g1 >= 0.0, "Nakagami pdf: SNR must be non-negative");
    const double rate = hop.m / hop.omega;
    if (g1 == 0.0) return hop.m == 1 ? rate : 0.0;
    return std::exp(hop.m * std::log(rate) + (hop.m - 1) * std::log(g1) - rate * g1 - std::lgamma(hop.m));
}

double nakagami_snr_cdf(const RfHop& hop, double g1)
{
    validate(hop);
    require(g1 >= 0.0, "Nakagami cdf: SNR must be non-negative");
    return boost::math::gamma_p(static_cast<double>(hop.m), hop.m * g1 / hop.omega);
}

double fso_snr_pdf(const FsoHop& hop, double g2)
{
    const DerivedFsoParams d = derive_fso(hop);
    require(g2 > 0.0, "FSO pdf: SNR must be positive");
    const double r = order(hop.detection);
    const double xi2 = hop.xi * hop.xi;
    const specfun::MeijerGSpec g{3, 0, {xi2 + 1.0}, {xi2, hop.alpha, hop.beta}};
    const double arg = d.h * hop.alpha * hop.beta * std::pow(g2 / d.mu_r, 1.0 / r);
    return xi2 / (r * g2 * std::tgamma(hop.alpha) * std::tgamma(hop.beta)) * specfun::meijer_g(g, arg);
}

double fso_snr_cdf(const FsoHop& hop, double g2)
{
    const DerivedFsoParams d = derive_fso(hop);
    require(g2 >= 0.0, "FSO cdf: SNR must be non-negative");
    if (g2 == 0.0) return 0.0;
    const double r = order(hop.detection);
    const double xi2 = hop.xi * hop.xi;
    const specfun::MeijerGSpec g{3, 1, {1.0, xi2 + 1.0}, {xi2, hop.alpha, hop.beta, 0.0}};
    const double arg = d.h * hop.alpha * hop.beta * std::pow(g2 / d.mu_r, 1.0 / r);
    const double v = xi2 / (std::tgamma(hop.alpha) * std::tgamma(hop.beta)) * specfun::meijer_g(g, arg);
    return std::clamp(v, 0.0, 1.0);
}

} // namespace rfso::channels
