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

#include "rfso/specfun/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/digamma.hpp>

namespace rfso::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

bool exact_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

std::complex<double> log_gamma_right(std::complex<double> z)
{
    z -= 1.0;
    std::complex<double> acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        acc += kLanczos[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

// log sin(pi z), stable for large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z)
{
    const double y = z.imag();
    if (std::abs(y) < 5.0) return std::log(std::sin(kPi * z));
    if (y < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    const std::complex<double> i(0.0, 1.0);
    return -i * kPi * z + std::log(0.5) + i * (kPi / 2.0) +
           std::log(1.0 - std::exp(2.0 * i * kPi * z));
}

} // namespace

SignedLogGamma log_gamma_signed(double x)
{
    if (exact_nonpositive_integer(x))
        return {std::numeric_limits<double>::infinity(), 0};
    int sign = 1;
    const double lg = boost::math::lgamma(x, &sign);
    return {lg, sign};
}

double reciprocal_gamma(double x)
{
    if (exact_nonpositive_integer(x)) return 0.0;
    if (x > 0.0 && x < 170.0) return 1.0 / std::tgamma(x);
    const auto lg = log_gamma_signed(x);
    return lg.sign * std::exp(-lg.log_abs);
}

std::complex<double> log_gamma(std::complex<double> z)
{
    if (z.real() < 0.5)
        return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
    return log_gamma_right(z);
}

double polygamma(int order, double x)
{
    if (order == 0) return boost::math::digamma(x);
    return boost::math::polygamma(order, x);
}

bool is_nonpositive_integer(double x, double tol)
{
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) <= tol;
}

} // namespace rfso::specfun
