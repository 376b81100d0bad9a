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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rfso/channels.hpp"
#include "rfso/relay.hpp"

namespace rfso::mcsim {

/// xoshiro256** seeded through splitmix64. Both are fully specified integer
/// recurrences, so a seed reproduces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept;

    /// Generator for sub-stream `stream` of a master seed.
    static Rng substream(std::uint64_t master, std::uint64_t stream) noexcept;

    std::uint64_t next() noexcept;
    /// Uniform on the open interval (0, 1).
    double uniform() noexcept;
    /// Standard normal by the Marsaglia polar method.
    double normal() noexcept;

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Gamma(shape, scale) by Marsaglia-Tsang; shapes below one are boosted.
double sample_gamma(double shape, double scale, Rng& rng);

/// RF-hop SNR: Gamma with shape m and scale Ω/m.
double sample_gamma1(const channels::RfHop& rf, Rng& rng);

/// FSO-hop SNR: μ_r (X Y I_p / h)^r with unit-mean Gamma factors X, Y and
/// pointing loss I_p = U^{1/ξ²}.
double sample_gamma2(const channels::FsoHop& fso, Rng& rng);

/// Samples handed to one sub-stream. Fixed so that estimates do not depend on
/// the accumulation batch size.
inline constexpr std::uint64_t kSamplesPerStream = 1024;

struct SimPlan {
    relay::RelayConfig cfg;
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 42;
    std::uint64_t batch = 65536; // samples per accumulation block
};

void validate(const SimPlan& plan);

/// γ₁γ₂/(γ₂ + C) from independent hop draws.
double sample_e2e(const SimPlan& plan, Rng& rng);

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0; // sample standard deviation / √n
    std::uint64_t n = 0;
};

enum class MetricKind { op, ber, capacity, moment, mgf };

struct Metric {
    MetricKind kind = MetricKind::op;
    double gamma_th = 1.0; // op
    double p = 1.0;        // ber
    double q = 1.0;        // ber
    int n = 1;             // moment
    double s = 1.0;        // mgf

    static Metric outage(double gamma_th);
    static Metric ber(double p, double q);
    static Metric capacity();
    static Metric moment(int n);
    static Metric mgf(double s);
};

std::string to_string(const Metric& metric);

/// Per-sample statistic whose mean is the metric.
double statistic(const Metric& metric, double gamma);

Estimate estimate_metric(const SimPlan& plan, const Metric& metric);

/// All metrics from one shared set of end-to-end samples.
std::vector<Estimate> estimate_metrics(const SimPlan& plan, const std::vector<Metric>& metrics);

/// Raw draws, in sample-index order.
std::vector<double> draw_e2e(const SimPlan& plan);
std::vector<double> draw_gamma1(const channels::RfHop& rf, std::uint64_t n, std::uint64_t seed);
std::vector<double> draw_gamma2(const channels::FsoHop& fso, std::uint64_t n, std::uint64_t seed);

struct KsResult {
    double statistic = 0.0;
    double p_value = 0.0;
    /// Largest CDF increment between neighbouring exact evaluations; bounds
    /// the interpolation error of `statistic`.
    double resolution = 0.0;
    std::uint64_t n = 0;
};

/// Asymptotic Kolmogorov tail probability for distance d over n samples.
double kolmogorov_pvalue(double d, std::uint64_t n);

/// One-sample KS test. The CDF is evaluated exactly at about `nodes` order
/// statistics and interpolated linearly in between.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf,
                 std::size_t nodes = 4096);

} // namespace rfso::mcsim
