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
#include <ostream>
#include <string>
#include <vector>

#include "rfso/cli/scenario.hpp"
#include "rfso/relay.hpp"

namespace rfso::cli {

/// Shortest decimal form that reads back to the same double (at most 17
/// significant digits).
std::string format_double(double v);

struct CurveRow {
    double axis_db = 0.0;
    std::string metric;
    double analytic = 0.0;
    std::optional<double> asymptotic;
    std::optional<double> mc_mean;
    std::optional<double> mc_se;
    double err_est = 0.0;
    std::optional<std::string> error; // set when the point failed
};

inline constexpr const char* kCsvHeader = "axis_db,metric,analytic,asymptotic,mc_mean,mc_se,err_est";

/// Rows ordered by axis value, then metric (config order), then curve.
std::vector<CurveRow> run_sweep(const Scenario& sc);

void write_csv(std::ostream& out, const std::vector<CurveRow>& rows);

struct ValidateOptions {
    /// Test hook: scales every analytic CDF by 1.01.
    bool corrupt_cdf = false;
};

struct CheckRecord {
    std::string check;
    double analytic = 0.0;
    double mc_mean = 0.0;
    double mc_se = 0.0;
    double z = 0.0;
    bool pass = false;
};

struct KsRecord {
    std::string check;
    double statistic = 0.0;
    double p_value = 0.0;
    double critical = 0.0; // 1% critical distance
    double resolution = 0.0;
    std::uint64_t n = 0;
    bool pass = false;
};

struct ValidationReport {
    std::string scenario;
    std::uint64_t seed = 0;
    std::uint64_t n_samples = 0;
    std::uint64_t ks_samples = 0;
    std::vector<CheckRecord> checks;
    std::vector<KsRecord> ks;

    bool passed() const;
    std::string to_json() const;
};

ValidationReport run_validate(const Scenario& sc, const ValidateOptions& opts = {});

struct PointRequest {
    std::string metric = "op"; // op, cdf, pdf, ber, capacity, moment, af, mgf
    int m = 1;
    double omega_db = 0.0;
    std::optional<std::string> preset;
    std::optional<double> alpha;
    std::optional<double> beta;
    double xi = 1.0;
    int r = 1;
    double gamma2_db = 0.0;
    double c_gain = 1.0;
    double gamma_th_db = 0.0; // op threshold, cdf/pdf argument
    double p = 1.0;
    double q = 1.0;
    int n = 1;
    double s = 1.0;
    std::string path = "egbmgf";     // capacity
    std::string asymptotic = "none"; // op, ber, mgf: none, all, dominant, dominant-j
};

relay::MetricResult run_point(const PointRequest& req);

/// Full command line (without the program name). Returns the exit status:
/// 0 success, 1 usage or config error, 2 numeric failure, 3 validation failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rfso::cli
