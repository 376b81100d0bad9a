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
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfso/relay.hpp"

namespace rfso::cli {

/// Malformed or inconsistent scenario file. The message names the line or
/// the [section] key at fault.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Axis { omega_db, gamma2_db };

std::string to_string(Axis axis);

struct SweepSpec {
    Axis axis = Axis::omega_db;
    double start_db = 0.0;
    double stop_db = 0.0;
    double step_db = 1.0;

    /// start, start + step, ... up to stop (inclusive within 1e-9 step).
    std::vector<double> points() const;
};

enum class MetricKind { op, ber, capacity, moment, af, mgf };

struct MetricSpec {
    MetricKind kind = MetricKind::op;
    int n = 1;      // moment / af order
    double s = 1.0; // mgf argument

    /// Token as written in configs: op, ber, capacity, moment:N, af:N, mgf:S.
    std::string token() const;
};

MetricSpec parse_metric(const std::string& token);

enum class AsymptoticChoice { none, all, dominant, dominant_j };

struct McSpec {
    std::uint64_t n_samples = 10'000'000;
    std::uint64_t ks_samples = 1'000'000;
    std::uint64_t seed = 42;
    std::uint64_t batch = 65536;
    bool in_sweep = false; // also fill the MC columns of sweeps
};

/// One run: fixed parameters, optional list-valued fields (each combination
/// is a curve) and at most one swept axis.
struct Scenario {
    std::string name = "custom";
    std::string description;

    std::vector<int> m{2};
    double omega_db = 10.0;

    std::vector<std::string> presets{"strong"};
    std::optional<double> alpha; // explicit α/β replace the presets
    std::optional<double> beta;
    std::vector<double> xi{1.1};
    std::vector<int> r{1, 2};
    double gamma2_db = 10.0;

    double c_gain = 1.0;

    std::optional<SweepSpec> sweep;

    std::vector<MetricSpec> metrics{MetricSpec{}};
    double gamma_th_db = 0.0;
    double p = 1.0;
    double q = 1.0;
    AsymptoticChoice asymptotic = AsymptoticChoice::none;
    relay::CapacityPath capacity_path = relay::CapacityPath::egbmgf;

    std::optional<McSpec> mc;
};

void validate(const Scenario& sc);

Scenario parse_scenario(std::istream& in, const std::string& source = "<config>");
Scenario load_scenario(const std::string& path);

/// Built-in scenarios mirroring the published figure set.
const std::vector<Scenario>& builtin_scenarios();
std::optional<Scenario> find_builtin(const std::string& name);

/// Default analytic-vs-simulation matrix: three presets, both detections,
/// ξ = 1.1, seed 42.
Scenario default_validation_scenario();

struct Curve {
    std::string label; // "r=1|strong|xi=1.1"; empty for a single curve
    relay::RelayConfig cfg;
};

/// Every combination of the list-valued fields, evaluated at the base
/// (unswept) parameter values.
std::vector<Curve> expand_curves(const Scenario& sc);

/// cfg with the swept quantity set to `axis_db`.
relay::RelayConfig at_axis(const relay::RelayConfig& cfg, Axis axis, double axis_db);

} // namespace rfso::cli
