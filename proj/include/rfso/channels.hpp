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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rfso::channels {

/// dB to linear power ratio.
double db_to_linear(double db);
double linear_to_db(double lin);

/// Nakagami-m RF hop (source to relay). The SNR is Gamma(m, Ω/m).
struct RfHop {
    int m = 1;          // fading parameter, integer in [1, 50]
    double omega = 1.0; // average fading power Ω (linear)
};

enum class Detection : int {
    heterodyne = 1,
    im_dd = 2,
};

/// Detection order r: 1 for heterodyne, 2 for IM/DD.
int order(Detection d);
std::optional<Detection> detection_from_order(int r);

/// Gamma-Gamma FSO hop (relay to destination) with pointing errors.
struct FsoHop {
    double alpha = 1.0;      // large-scale scintillation
    double beta = 1.0;       // small-scale scintillation
    double xi = 1.0;         // beam-width to jitter ratio
    Detection detection = Detection::heterodyne;
    double gamma2_bar = 1.0; // average SNR (linear)
};

struct DerivedFsoParams {
    double h = 0.0;    // ξ²/(ξ²+1)
    double mu_r = 0.0; // average electrical SNR
    double A = 0.0;
    double B = 0.0;
};

struct KappaVectors {
    std::vector<double> kappa1; // r entries
    std::vector<double> kappa2; // 3r+1 entries, last one is j
};

enum class Turbulence { weak, moderate, strong };

struct TurbulencePreset {
    std::string_view label;
    double alpha;
    double beta;
};

TurbulencePreset preset(Turbulence t);
std::optional<Turbulence> parse_turbulence(std::string_view label);

/// Largest accepted ξ². Beyond it the pointing loss is negligible and the
/// Meijer-G parameters crowd together.
inline constexpr double kMaxXiSquared = 1e3;
inline constexpr int kMaxNakagamiM = 50;

void validate(const RfHop& hop);
void validate(const FsoHop& hop);

DerivedFsoParams derive_fso(const FsoHop& hop);
KappaVectors build_kappas(const FsoHop& hop, int j);

double nakagami_snr_pdf(const RfHop& hop, double g1);
double nakagami_snr_cdf(const RfHop& hop, double g1);

double fso_snr_pdf(const FsoHop& hop, double g2);
/// P[γ₂ <= g2], a single G^{3,1}_{2,4} obtained by integrating the density.
double fso_snr_cdf(const FsoHop& hop, double g2);

} // namespace rfso::channels
