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

#include <cmath>
#include <functional>
#include <set>

#include "json.hpp"

#include "rfso/channels.hpp"
#include "rfso/cli/commands.hpp"
#include "rfso/mcsim.hpp"

namespace rfso::cli {

namespace {

constexpr double kZLimit = 3.0;
constexpr double kKsLevel = 0.01;
// Kolmogorov 1% quantile, sqrt(-ln(0.005) / 2).
constexpr double kKsQuantile = 1.6276;

std::optional<mcsim::Metric> to_mc(const Scenario& sc, const MetricSpec& m)
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

double analytic(const Scenario& sc, const MetricSpec& m, const relay::RelayConfig& cfg, bool corrupt)
{
    switch (m.kind) {
    case MetricKind::op: {
        const double v = relay::outage_probability(cfg, channels::db_to_linear(sc.gamma_th_db)).value;
        return corrupt ? 1.01 * v : v;
    }
    case MetricKind::ber: return relay::average_ber(cfg, {sc.p, sc.q}).value;
    case MetricKind::capacity: return relay::ergodic_capacity(cfg, sc.capacity_path).value;
    case MetricKind::moment: return relay::e2e_moment(cfg, m.n).value;
    case MetricKind::mgf: return relay::e2e_mgf(cfg, m.s).value;
    case MetricKind::af: break;
    }
    return 0.0;
}

KsRecord ks_record(std::string name, std::vector<double> samples, const std::function<double(double)>& cdf)
{
    const auto res = mcsim::ks_test(std::move(samples), cdf);
    KsRecord rec;
    rec.check = std::move(name);
    rec.statistic = res.statistic;
    rec.p_value = res.p_value;
    const double sn = std::sqrt(static_cast<double>(res.n));
    rec.critical = kKsQuantile / (sn + 0.12 + 0.11 / sn);
    rec.resolution = res.resolution;
    rec.n = res.n;
    rec.pass = res.p_value >= kKsLevel;
    return rec;
}

} // namespace

bool ValidationReport::passed() const
{
    for (const auto& c : checks)
        if (!c.pass) return false;
    for (const auto& k : ks)
        if (!k.pass) return false;
    return true;
}

std::string ValidationReport::to_json() const
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["scenario"] = scenario;
    j["seed"] = seed;
    j["n_samples"] = n_samples;
    j["ks_samples"] = ks_samples;
    j["passed"] = passed();
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json r;
        r["check"] = c.check;
        r["analytic"] = c.analytic;
        r["mc_mean"] = c.mc_mean;
        r["mc_se"] = c.mc_se;
        r["z"] = c.z;
        r["pass"] = c.pass;
        j["checks"].push_back(std::move(r));
    }
    j["ks"] = ordered_json::array();
    for (const auto& k : ks) {
        ordered_json r;
        r["check"] = k.check;
        r["statistic"] = k.statistic;
        r["p_value"] = k.p_value;
        r["critical"] = k.critical;
        r["resolution"] = k.resolution;
        r["n"] = k.n;
        r["pass"] = k.pass;
        j["ks"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

ValidationReport run_validate(const Scenario& sc, const ValidateOptions& opts)
{
    validate(sc);
    if (!sc.mc) throw ConfigError("[mc] section is required for validation");
    const McSpec& mc = *sc.mc;

    ValidationReport rep;
    rep.scenario = sc.name;
    rep.seed = mc.seed;
    rep.n_samples = mc.n_samples;
    rep.ks_samples = mc.ks_samples;

    const auto curves = expand_curves(sc);
    for (const auto& curve : curves) {
        std::vector<mcsim::Metric> wanted;
        std::vector<const MetricSpec*> specs;
        for (const auto& m : sc.metrics)
            if (auto mm = to_mc(sc, m)) {
                wanted.push_back(*mm);
                specs.push_back(&m);
            }
        if (wanted.empty()) continue;
        const auto est = mcsim::estimate_metrics({curve.cfg, mc.n_samples, mc.seed, mc.batch}, wanted);
        for (std::size_t i = 0; i < est.size(); ++i) {
            CheckRecord rec;
            rec.check = curve.label.empty() ? specs[i]->token() : specs[i]->token() + "|" + curve.label;
            rec.analytic = analytic(sc, *specs[i], curve.cfg, opts.corrupt_cdf);
            rec.mc_mean = est[i].mean;
            rec.mc_se = est[i].std_error;
            const double diff = rec.analytic - rec.mc_mean;
            rec.z = rec.mc_se > 0.0 ? diff / rec.mc_se : (diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff));
            rec.pass = std::isfinite(rec.z) && std::abs(rec.z) <= kZLimit;
            rep.checks.push_back(rec);
        }
    }

    const double scale = opts.corrupt_cdf ? 1.01 : 1.0;
    std::uint64_t stream = 1;
    std::set<int> seen_m;
    for (const auto& curve : curves) {
        const auto rf = curve.cfg.rf;
        if (!seen_m.insert(rf.m).second) continue;
        rep.ks.push_back(ks_record("gamma1|m=" + std::to_string(rf.m) + "|omega_db=" + format_double(sc.omega_db),
                                   mcsim::draw_gamma1(rf, mc.ks_samples, mc.seed + stream++),
                                   [&](double g) { return scale * channels::nakagami_snr_cdf(rf, g); }));
    }
    std::set<std::string> seen_fso;
    for (const auto& curve : curves) {
        const auto fso = curve.cfg.fso;
        const std::string name = "gamma2|alpha=" + format_double(fso.alpha) + "|beta=" + format_double(fso.beta) +
                                 "|xi=" + format_double(fso.xi) + "|r=" + std::to_string(channels::order(fso.detection)) +
                                 "|gamma2_db=" + format_double(sc.gamma2_db);
        if (!seen_fso.insert(name).second) continue;
        rep.ks.push_back(ks_record(name, mcsim::draw_gamma2(fso, mc.ks_samples, mc.seed + stream++),
                                   [&](double g) { return scale * channels::fso_snr_cdf(fso, g); }));
    }
    return rep;
}

} // namespace rfso::cli
