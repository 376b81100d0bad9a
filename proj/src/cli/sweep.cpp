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

#include <charconv>
#include <cmath>
#include <limits>

#include "rfso/channels.hpp"
#include "rfso/cli/commands.hpp"
#include "rfso/error.hpp"
#include "rfso/mcsim.hpp"

namespace rfso::cli {

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

relay::AsymptoticMode asymptotic_mode(AsymptoticChoice c)
{
    relay::AsymptoticMode mode;
    mode.dominant_only = c == AsymptoticChoice::dominant || c == AsymptoticChoice::dominant_j;
    if (c == AsymptoticChoice::dominant_j) mode.dominant = relay::DominantTerm::j_slot;
    return mode;
}

relay::MetricResult analytic_value(const Scenario& sc, const MetricSpec& m, const relay::RelayConfig& cfg)
{
    switch (m.kind) {
    case MetricKind::op: return relay::outage_probability(cfg, channels::db_to_linear(sc.gamma_th_db));
    case MetricKind::ber: return relay::average_ber(cfg, {sc.p, sc.q});
    case MetricKind::capacity: return relay::ergodic_capacity(cfg, sc.capacity_path);
    case MetricKind::moment: return relay::e2e_moment(cfg, m.n);
    case MetricKind::af: return relay::amount_of_fading(cfg, m.n);
    case MetricKind::mgf: return relay::e2e_mgf(cfg, m.s);
    }
    throw InvalidInput("unknown metric");
}

std::optional<double> asymptotic_value(const Scenario& sc, const MetricSpec& m, const relay::RelayConfig& cfg)
{
    if (sc.asymptotic == AsymptoticChoice::none) return std::nullopt;
    const auto mode = asymptotic_mode(sc.asymptotic);
    switch (m.kind) {
    case MetricKind::op:
        return relay::e2e_cdf_asymptotic(cfg, channels::db_to_linear(sc.gamma_th_db), mode).value;
    case MetricKind::ber: return relay::average_ber_asymptotic(cfg, {sc.p, sc.q}, mode).value;
    case MetricKind::mgf: return relay::e2e_mgf_asymptotic(cfg, m.s, mode).value;
    default: return std::nullopt;
    }
}

std::optional<mcsim::Metric> mc_metric(const Scenario& sc, const MetricSpec& m)
{
    switch (m.kind) {
    case MetricKind::op: return mcsim::Metric::outage(channels::db_to_linear(sc.gamma_th_db));
    case MetricKind::ber: return mcsim::Metric::ber(sc.p, sc.q);
    case MetricKind::capacity: return mcsim::Metric::capacity();
    case MetricKind::moment: return mcsim::Metric::moment(m.n);
    case MetricKind::mgf: return mcsim::Metric::mgf(m.s);
    case MetricKind::af: return std::nullopt;
    }
    return std::nullopt;
}

std::string row_label(const MetricSpec& m, const Curve& c)
{
    return c.label.empty() ? m.token() : m.token() + "|" + c.label;
}

} // namespace

std::vector<CurveRow> run_sweep(const Scenario& sc)
{
    validate(sc);
    if (!sc.sweep) throw ConfigError("[sweep] section is required for a sweep");
    const auto curves = expand_curves(sc);
    const bool with_mc = sc.mc && sc.mc->in_sweep;

    std::vector<CurveRow> rows;
    for (double x : sc.sweep->points()) {
        // MC columns share one sample set per (point, curve).
        std::vector<std::vector<std::optional<mcsim::Estimate>>> mc(curves.size());
        if (with_mc) {
            for (std::size_t ci = 0; ci < curves.size(); ++ci) {
                std::vector<mcsim::Metric> wanted;
                std::vector<std::size_t> slot;
                for (std::size_t mi = 0; mi < sc.metrics.size(); ++mi)
                    if (auto mm = mc_metric(sc, sc.metrics[mi])) {
                        wanted.push_back(*mm);
                        slot.push_back(mi);
                    }
                mc[ci].assign(sc.metrics.size(), std::nullopt);
                if (wanted.empty()) continue;
                mcsim::SimPlan plan{at_axis(curves[ci].cfg, sc.sweep->axis, x), sc.mc->n_samples, sc.mc->seed,
                                    sc.mc->batch};
                const auto est = mcsim::estimate_metrics(plan, wanted);
                for (std::size_t k = 0; k < est.size(); ++k) mc[ci][slot[k]] = est[k];
            }
        }
        for (std::size_t mi = 0; mi < sc.metrics.size(); ++mi) {
            for (std::size_t ci = 0; ci < curves.size(); ++ci) {
                const auto& metric = sc.metrics[mi];
                const auto cfg = at_axis(curves[ci].cfg, sc.sweep->axis, x);
                CurveRow row;
                row.axis_db = x;
                row.metric = row_label(metric, curves[ci]);
                try {
                    const auto res = analytic_value(sc, metric, cfg);
                    row.analytic = res.value;
                    row.err_est = res.error_estimate;
                    row.asymptotic = asymptotic_value(sc, metric, cfg);
                } catch (const std::exception& e) {
                    row.analytic = std::numeric_limits<double>::quiet_NaN();
                    row.asymptotic.reset();
                    row.error = e.what();
                }
                if (with_mc && mc[ci][mi]) {
                    row.mc_mean = mc[ci][mi]->mean;
                    row.mc_se = mc[ci][mi]->std_error;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<CurveRow>& rows)
{
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string{}; };
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << format_double(r.axis_db) << ',' << r.metric << ',' << format_double(r.analytic) << ','
            << opt(r.asymptotic) << ',' << opt(r.mc_mean) << ',' << opt(r.mc_se) << ','
            << (r.error ? std::string("ERR") : format_double(r.err_est)) << '\n';
    }
}

relay::MetricResult run_point(const PointRequest& req)
{
    relay::RelayConfig cfg;
    cfg.rf = {req.m, channels::db_to_linear(req.omega_db)};
    if (req.preset) {
        if (req.alpha || req.beta) throw ConfigError("--preset cannot be combined with --alpha/--beta");
        const auto t = channels::parse_turbulence(*req.preset);
        if (!t) throw ConfigError("--preset: unknown preset '" + *req.preset + "' (weak, moderate, strong)");
        cfg.fso.alpha = channels::preset(*t).alpha;
        cfg.fso.beta = channels::preset(*t).beta;
    } else {
        if (!req.alpha || !req.beta) throw ConfigError("either --preset or both --alpha and --beta are required");
        cfg.fso.alpha = *req.alpha;
        cfg.fso.beta = *req.beta;
    }
    cfg.fso.xi = req.xi;
    const auto det = channels::detection_from_order(req.r);
    if (!det) throw ConfigError("--r: detection order must be one of {1,2}");
    cfg.fso.detection = *det;
    cfg.fso.gamma2_bar = channels::db_to_linear(req.gamma2_db);
    cfg.c_gain = req.c_gain;
    try {
        relay::validate(cfg);
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }

    AsymptoticChoice choice;
    if (req.asymptotic == "none")
        choice = AsymptoticChoice::none;
    else if (req.asymptotic == "all")
        choice = AsymptoticChoice::all;
    else if (req.asymptotic == "dominant")
        choice = AsymptoticChoice::dominant;
    else if (req.asymptotic == "dominant-j")
        choice = AsymptoticChoice::dominant_j;
    else
        throw ConfigError("--asymptotic: expected none, all, dominant or dominant-j");
    const auto mode = asymptotic_mode(choice);
    const bool asym = choice != AsymptoticChoice::none;

    const double g = channels::db_to_linear(req.gamma_th_db);
    const relay::BinaryModulation mod{req.p, req.q};
    const std::string& m = req.metric;
    if (asym && m != "op" && m != "cdf" && m != "ber" && m != "mgf")
        throw ConfigError("--asymptotic applies to op, cdf, ber and mgf only");
    if (m == "op" || m == "cdf")
        return asym ? relay::e2e_cdf_asymptotic(cfg, g, mode) : relay::outage_probability(cfg, g);
    if (m == "pdf") return relay::e2e_pdf(cfg, g);
    if (m == "ber") return asym ? relay::average_ber_asymptotic(cfg, mod, mode) : relay::average_ber(cfg, mod);
    if (m == "capacity") {
        if (req.path == "egbmgf") return relay::ergodic_capacity(cfg, relay::CapacityPath::egbmgf);
        if (req.path == "quadrature") return relay::ergodic_capacity(cfg, relay::CapacityPath::quadrature);
        throw ConfigError("--path: expected egbmgf or quadrature");
    }
    if (m == "moment") return relay::e2e_moment(cfg, req.n);
    if (m == "af") return relay::amount_of_fading(cfg, req.n);
    if (m == "mgf") return asym ? relay::e2e_mgf_asymptotic(cfg, req.s, mode) : relay::e2e_mgf(cfg, req.s);
    throw ConfigError("--metric: unknown metric '" + m + "'");
}

} // namespace rfso::cli
