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

#include <cstddef>
#include <string>

#include "rfso/channels.hpp"

namespace rfso::relay {

/// Dual-hop link with a fixed-gain amplify-and-forward relay:
/// γ = γ₁γ₂ / (γ₂ + C).
struct RelayConfig {
    channels::RfHop rf;
    channels::FsoHop fso;
    double c_gain = 1.0;
};

void validate(const RelayConfig& cfg);

/// Binary modulation family with conditional BER Γ(p, qγ) / (2Γ(p)).
struct BinaryModulation {
    double p = 1.0;
    double q = 1.0;

    static BinaryModulation dbpsk() { return {1.0, 1.0}; }
};

enum class MetricPath {
    exact,
    asymptotic_all_terms,
    asymptotic_dominant,
    quadrature,
    egbmgf,
};

std::string to_string(MetricPath path);

struct MetricResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    double error_estimate = 0.0;
    MetricPath path = MetricPath::exact;
};

/// Which single term the dominant-only asymptotics keep in each (k, j)
/// summand: the smallest κ₂ exponent (the one that actually dominates as
/// μ_r grows), or the trailing κ₂ slot holding j.
enum class DominantTerm {
    smallest_exponent,
    j_slot,
};

struct AsymptoticMode {
    bool dominant_only = false;
    DominantTerm dominant = DominantTerm::smallest_exponent;
};

enum class CapacityPath {
    egbmgf,
    quadrature,
};

MetricResult e2e_cdf(const RelayConfig& cfg, double gamma);
/// 1 - e2e_cdf computed without the subtraction.
MetricResult e2e_ccdf(const RelayConfig& cfg, double gamma);
MetricResult e2e_cdf_asymptotic(const RelayConfig& cfg, double gamma, AsymptoticMode mode = {});
MetricResult e2e_pdf(const RelayConfig& cfg, double gamma);
MetricResult e2e_mgf(const RelayConfig& cfg, double s);
MetricResult e2e_mgf_asymptotic(const RelayConfig& cfg, double s, AsymptoticMode mode = {});
MetricResult e2e_moment(const RelayConfig& cfg, int n);

MetricResult outage_probability(const RelayConfig& cfg, double gamma_th);
MetricResult amount_of_fading(const RelayConfig& cfg, int n);

MetricResult average_ber(const RelayConfig& cfg, const BinaryModulation& mod);
/// High-SNR expansion of the average BER. The constant term is 1/2, the
/// limit the exact expression reaches as the FSO hop becomes transparent.
MetricResult average_ber_asymptotic(const RelayConfig& cfg, const BinaryModulation& mod,
                                    AsymptoticMode mode = {});

/// Ergodic capacity in bit/s/Hz.
MetricResult ergodic_capacity(const RelayConfig& cfg, CapacityPath path = CapacityPath::egbmgf);

} // namespace rfso::relay
