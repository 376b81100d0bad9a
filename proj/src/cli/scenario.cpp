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

#include "rfso/cli/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "rfso/channels.hpp"
#include "rfso/cli/commands.hpp"
#include "rfso/error.hpp"

namespace rfso::cli {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

[[noreturn]] void fail(const std::string& where, const std::string& msg)
{
    throw ConfigError(where + ": " + msg);
}

double to_double(const std::string& text, const std::string& where)
{
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
        fail(where, "expected a number, got '" + t + "'");
    return v;
}

long long to_integer(const std::string& text, const std::string& where)
{
    const std::string t = trim(text);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        fail(where, "expected an integer, got '" + t + "'");
    return v;
}

bool to_bool(const std::string& text, const std::string& where)
{
    const std::string t = trim(text);
    if (t == "true" || t == "yes" || t == "1") return true;
    if (t == "false" || t == "no" || t == "0") return false;
    fail(where, "expected true or false, got '" + t + "'");
}

std::uint64_t to_count(const std::string& text, const std::string& where)
{
    const long long v = to_integer(text, where);
    if (v <= 0) fail(where, "must be positive");
    return static_cast<std::uint64_t>(v);
}

const std::map<std::string, std::set<std::string>>& known_keys()
{
    static const std::map<std::string, std::set<std::string>> keys = {
        {"", {"name", "description"}},
        {"rf", {"m", "omega_db"}},
        {"fso", {"preset", "alpha", "beta", "xi", "r", "gamma2_db"}},
        {"relay", {"c"}},
        {"sweep", {"axis", "start_db", "stop_db", "step_db"}},
        {"metrics", {"list", "gamma_th_db", "p", "q", "asymptotic", "capacity_path"}},
        {"mc", {"n_samples", "ks_samples", "seed", "batch", "in_sweep"}},
    };
    return keys;
}

std::string where_of(const std::string& section, const std::string& key)
{
    return section.empty() ? key : "[" + section + "] " + key;
}

Scenario from_tree(const pt::ptree& tree)
{
    Scenario sc;
    sc.r = {1};
    bool have_sweep = false;
    SweepSpec sweep;
    std::set<std::string> sweep_keys;

    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            // top-level key
            const std::string w = where_of("", section);
            if (!known_keys().at("").contains(section)) fail(w, "unknown key");
            if (section == "name") sc.name = trim(body.data());
            if (section == "description") sc.description = trim(body.data());
            continue;
        }
        const auto known = known_keys().find(section);
        if (known == known_keys().end() || section.empty()) fail("[" + section + "]", "unknown section");
        for (const auto& [key, node] : body) {
            const std::string w = where_of(section, key);
            if (!known->second.contains(key)) fail(w, "unknown key");
            const std::string v = node.data();
            if (section == "rf") {
                if (key == "m") {
                    sc.m.clear();
                    for (const auto& it : split_list(v)) sc.m.push_back(static_cast<int>(to_integer(it, w)));
                } else {
                    sc.omega_db = to_double(v, w);
                }
            } else if (section == "fso") {
                if (key == "preset") {
                    sc.presets = split_list(v);
                    for (const auto& p : sc.presets)
                        if (!channels::parse_turbulence(p)) fail(w, "unknown preset '" + p + "' (weak, moderate, strong)");
                } else if (key == "alpha") {
                    sc.alpha = to_double(v, w);
                } else if (key == "beta") {
                    sc.beta = to_double(v, w);
                } else if (key == "xi") {
                    sc.xi.clear();
                    for (const auto& it : split_list(v)) sc.xi.push_back(to_double(it, w));
                } else if (key == "r") {
                    sc.r.clear();
                    for (const auto& it : split_list(v)) {
                        const long long r = to_integer(it, w);
                        if (r != 1 && r != 2) fail(w, "detection order must be one of {1,2}");
                        sc.r.push_back(static_cast<int>(r));
                    }
                } else {
                    sc.gamma2_db = to_double(v, w);
                }
            } else if (section == "relay") {
                sc.c_gain = to_double(v, w);
            } else if (section == "sweep") {
                have_sweep = true;
                sweep_keys.insert(key);
                if (key == "axis") {
                    const std::string a = trim(v);
                    if (a == "omega_db")
                        sweep.axis = Axis::omega_db;
                    else if (a == "gamma2_db")
                        sweep.axis = Axis::gamma2_db;
                    else
                        fail(w, "axis must be omega_db or gamma2_db");
                } else if (key == "start_db") {
                    sweep.start_db = to_double(v, w);
                } else if (key == "stop_db") {
                    sweep.stop_db = to_double(v, w);
                } else {
                    sweep.step_db = to_double(v, w);
                }
            } else if (section == "metrics") {
                if (key == "list") {
                    sc.metrics.clear();
                    for (const auto& it : split_list(v)) {
                        try {
                            sc.metrics.push_back(parse_metric(it));
                        } catch (const InvalidInput& e) {
                            fail(w, e.what());
                        }
                    }
                } else if (key == "gamma_th_db") {
                    sc.gamma_th_db = to_double(v, w);
                } else if (key == "p") {
                    sc.p = to_double(v, w);
                } else if (key == "q") {
                    sc.q = to_double(v, w);
                } else if (key == "asymptotic") {
                    const std::string a = trim(v);
                    if (a == "none")
                        sc.asymptotic = AsymptoticChoice::none;
                    else if (a == "all")
                        sc.asymptotic = AsymptoticChoice::all;
                    else if (a == "dominant")
                        sc.asymptotic = AsymptoticChoice::dominant;
                    else if (a == "dominant-j")
                        sc.asymptotic = AsymptoticChoice::dominant_j;
                    else
                        fail(w, "expected none, all, dominant or dominant-j");
                } else {
                    const std::string a = trim(v);
                    if (a == "egbmgf")
                        sc.capacity_path = relay::CapacityPath::egbmgf;
                    else if (a == "quadrature")
                        sc.capacity_path = relay::CapacityPath::quadrature;
                    else
                        fail(w, "expected egbmgf or quadrature");
                }
            } else if (section == "mc") {
                if (!sc.mc) sc.mc = McSpec{};
                if (key == "n_samples")
                    sc.mc->n_samples = to_count(v, w);
                else if (key == "ks_samples")
                    sc.mc->ks_samples = to_count(v, w);
                else if (key == "seed")
                    sc.mc->seed = static_cast<std::uint64_t>(to_integer(v, w));
                else if (key == "batch")
                    sc.mc->batch = to_count(v, w);
                else
                    sc.mc->in_sweep = to_bool(v, w);
            }
        }
        if (section == "mc" && !sc.mc) sc.mc = McSpec{};
    }
    if (have_sweep) {
        for (const char* k : {"axis", "start_db", "stop_db", "step_db"})
            if (!sweep_keys.contains(k)) fail(where_of("sweep", k), "missing");
        sc.sweep = sweep;
    }
    return sc;
}

} // namespace

std::string to_string(Axis axis)
{
    return axis == Axis::omega_db ? "omega_db" : "gamma2_db";
}

std::vector<double> SweepSpec::points() const
{
    std::vector<double> out;
    const double span = stop_db - start_db;
    const auto count = static_cast<long long>(std::floor(span / step_db + 1e-9));
    for (long long i = 0; i <= count; ++i) out.push_back(start_db + static_cast<double>(i) * step_db);
    return out;
}

std::string MetricSpec::token() const
{
    switch (kind) {
    case MetricKind::op: return "op";
    case MetricKind::ber: return "ber";
    case MetricKind::capacity: return "capacity";
    case MetricKind::moment: return "moment:" + std::to_string(n);
    case MetricKind::af: return "af:" + std::to_string(n);
    case MetricKind::mgf: return "mgf:" + format_double(s);
    }
    return "unknown";
}

MetricSpec parse_metric(const std::string& token)
{
    const std::string t = trim(token);
    const auto colon = t.find(':');
    const std::string head = t.substr(0, colon);
    const std::string arg = colon == std::string::npos ? std::string{} : t.substr(colon + 1);
    MetricSpec m;
    auto need_none = [&] {
        if (colon != std::string::npos) throw InvalidInput("metric '" + head + "' takes no argument");
    };
    if (head == "op") {
        need_none();
        m.kind = MetricKind::op;
    } else if (head == "ber") {
        need_none();
        m.kind = MetricKind::ber;
    } else if (head == "capacity") {
        need_none();
        m.kind = MetricKind::capacity;
    } else if (head == "moment" || head == "af") {
        m.kind = head == "moment" ? MetricKind::moment : MetricKind::af;
        if (colon != std::string::npos) {
            int n = 0;
            const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
            if (ec != std::errc() || ptr != arg.data() + arg.size() || n < 1)
                throw InvalidInput("metric '" + t + "': order must be a positive integer");
            m.n = n;
        } else {
            m.n = head == "moment" ? 1 : 2;
        }
    } else if (head == "mgf") {
        m.kind = MetricKind::mgf;
        if (colon != std::string::npos) {
            double s = 0.0;
            const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), s);
            if (ec != std::errc() || ptr != arg.data() + arg.size() || !(s >= 0.0))
                throw InvalidInput("metric '" + t + "': argument must be a non-negative number");
            m.s = s;
        }
    } else {
        throw InvalidInput("unknown metric '" + t + "' (op, ber, capacity, moment:N, af:N, mgf:S)");
    }
    return m;
}

void validate(const Scenario& sc)
{
    if (sc.m.empty() || sc.presets.empty() || sc.xi.empty() || sc.r.empty())
        throw ConfigError("list-valued fields need at least one entry");
    if (sc.metrics.empty()) throw ConfigError("[metrics] list: at least one metric is required");
    if (sc.alpha.has_value() != sc.beta.has_value())
        throw ConfigError("[fso] alpha/beta: give both or neither");
    if (!(sc.p > 0.0)) throw ConfigError("[metrics] p: must be positive");
    if (!(sc.q > 0.0)) throw ConfigError("[metrics] q: must be positive");
    if (sc.sweep) {
        const SweepSpec& s = *sc.sweep;
        if (!(s.step_db > 0.0)) throw ConfigError("[sweep] step_db: must be positive");
        if (!(s.start_db <= s.stop_db)) throw ConfigError("[sweep] start_db: must not exceed stop_db");
        if ((s.stop_db - s.start_db) / s.step_db > 10000.0) throw ConfigError("[sweep] step_db: more than 10000 points");
    }
    if (sc.mc && sc.mc->n_samples < 1000) throw ConfigError("[mc] n_samples: at least 1000 samples are required");
    if (sc.mc && sc.mc->ks_samples < 1000) throw ConfigError("[mc] ks_samples: at least 1000 samples are required");
    try {
        for (const auto& c : expand_curves(sc)) {
            relay::validate(c.cfg);
            if (sc.sweep)
                for (double x : sc.sweep->points()) relay::validate(at_axis(c.cfg, sc.sweep->axis, x));
        }
    } catch (const InvalidInput& e) {
        throw ConfigError(std::string("invalid parameters: ") + e.what());
    }
}

Scenario parse_scenario(std::istream& in, const std::string& source)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
    }
    Scenario sc;
    try {
        sc = from_tree(tree);
        validate(sc);
    } catch (const ConfigError& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return sc;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open file");
    return parse_scenario(in, path);
}

namespace {

Scenario figure(std::string name, std::string description)
{
    Scenario sc;
    sc.name = std::move(name);
    sc.description = std::move(description);
    sc.m = {2};
    sc.omega_db = 10.0;
    sc.gamma2_db = 10.0;
    sc.c_gain = 1.0;
    sc.gamma_th_db = 0.0;
    return sc;
}

std::vector<Scenario> make_builtins()
{
    std::vector<Scenario> out;
    const std::vector<std::string> all_presets{"strong", "moderate", "weak"};

    Scenario f1 = figure("fig1", "OP vs RF average power (0-40 dB), heterodyne and IM/DD, three turbulence presets, "
                                 "xi = 1.1, gamma2 = 10 dB, C = 1, m = 2, gamma_th = 0 dB");
    f1.presets = all_presets;
    f1.r = {1, 2};
    f1.xi = {1.1};
    f1.sweep = SweepSpec{Axis::omega_db, 0.0, 40.0, 2.0};
    f1.metrics = {parse_metric("op")};
    out.push_back(f1);

    Scenario f2 = figure("fig2", "OP vs FSO average SNR (0-50 dB) with the all-terms high-SNR form, strong "
                                 "turbulence, xi = 1.1, Omega = 20 dB, both detections, m = 2, gamma_th = 0 dB");
    f2.omega_db = 20.0;
    f2.presets = {"strong"};
    f2.r = {1, 2};
    f2.xi = {1.1};
    f2.sweep = SweepSpec{Axis::gamma2_db, 0.0, 50.0, 2.0};
    f2.metrics = {parse_metric("op")};
    f2.asymptotic = AsymptoticChoice::all;
    out.push_back(f2);

    Scenario f3 = figure("fig3", "OP vs RF average power (0-40 dB), IM/DD, three turbulence presets, xi in {1, 6.7}, "
                                 "gamma2 = 10 dB, C = 1, m = 2, gamma_th = 0 dB");
    f3.presets = all_presets;
    f3.r = {2};
    f3.xi = {1.0, 6.7};
    f3.sweep = SweepSpec{Axis::omega_db, 0.0, 40.0, 2.0};
    f3.metrics = {parse_metric("op")};
    out.push_back(f3);

    Scenario f4 = figure("fig4", "DBPSK BER (p = q = 1) vs RF average power (0-40 dB), heterodyne and IM/DD, three "
                                 "turbulence presets, xi = 1.1, gamma2 = 10 dB, C = 1, m = 2");
    f4.presets = all_presets;
    f4.r = {1, 2};
    f4.xi = {1.1};
    f4.sweep = SweepSpec{Axis::omega_db, 0.0, 40.0, 2.0};
    f4.metrics = {parse_metric("ber")};
    out.push_back(f4);

    Scenario f5 = figure("fig5", "DBPSK BER vs FSO average SNR (0-50 dB) with the all-terms high-SNR form, strong "
                                 "turbulence, xi = 1.1, Omega = 20 dB, both detections, m = 2");
    f5.omega_db = 20.0;
    f5.presets = {"strong"};
    f5.r = {1, 2};
    f5.xi = {1.1};
    f5.sweep = SweepSpec{Axis::gamma2_db, 0.0, 50.0, 2.0};
    f5.metrics = {parse_metric("ber")};
    f5.asymptotic = AsymptoticChoice::all;
    out.push_back(f5);

    Scenario f6 = figure("fig6", "DBPSK BER vs RF average power (0-40 dB), IM/DD, three turbulence presets, xi in "
                                 "{1, 6.7}, gamma2 = 10 dB, C = 1, m = 2");
    f6.presets = all_presets;
    f6.r = {2};
    f6.xi = {1.0, 6.7};
    f6.sweep = SweepSpec{Axis::omega_db, 0.0, 40.0, 2.0};
    f6.metrics = {parse_metric("ber")};
    out.push_back(f6);

    Scenario f7 = figure("fig7", "ergodic capacity vs FSO average SNR (0-40 dB), strong turbulence, xi in {1, 6.7}, "
                                 "heterodyne and IM/DD, Omega = 10 dB, C = 1, m = 2");
    f7.presets = {"strong"};
    f7.r = {1, 2};
    f7.xi = {1.0, 6.7};
    f7.sweep = SweepSpec{Axis::gamma2_db, 0.0, 40.0, 5.0};
    f7.metrics = {parse_metric("capacity")};
    out.push_back(f7);

    for (auto& sc : out) sc.mc = McSpec{};
    return out;
}

} // namespace

const std::vector<Scenario>& builtin_scenarios()
{
    static const std::vector<Scenario> all = make_builtins();
    return all;
}

std::optional<Scenario> find_builtin(const std::string& name)
{
    for (const auto& sc : builtin_scenarios())
        if (sc.name == name) return sc;
    return std::nullopt;
}

Scenario default_validation_scenario()
{
    Scenario sc = figure("default-validation", "three turbulence presets, both detections, xi = 1.1, "
                                               "Omega = 10 dB, gamma2 = 10 dB, C = 1, m = 2");
    sc.presets = {"strong", "moderate", "weak"};
    sc.r = {1, 2};
    sc.xi = {1.1};
    sc.metrics.clear();
    for (const char* t : {"op", "ber", "capacity", "moment:1", "mgf:1"}) sc.metrics.push_back(parse_metric(t));
    sc.mc = McSpec{};
    return sc;
}

std::vector<Curve> expand_curves(const Scenario& sc)
{
    std::vector<Curve> out;
    for (int m : sc.m) {
        for (const auto& preset : sc.presets) {
            for (int r : sc.r) {
                for (double xi : sc.xi) {
                    Curve c;
                    std::vector<std::string> parts;
                    if (sc.m.size() > 1) parts.push_back("m=" + std::to_string(m));
                    if (sc.r.size() > 1) parts.push_back("r=" + std::to_string(r));
                    if (sc.presets.size() > 1 && !sc.alpha) parts.push_back(preset);
                    if (sc.xi.size() > 1) parts.push_back("xi=" + format_double(xi));
                    for (std::size_t i = 0; i < parts.size(); ++i) c.label += (i ? "|" : "") + parts[i];

                    c.cfg.rf = {m, channels::db_to_linear(sc.omega_db)};
                    if (sc.alpha) {
                        c.cfg.fso.alpha = *sc.alpha;
                        c.cfg.fso.beta = *sc.beta;
                    } else {
                        const auto t = channels::parse_turbulence(preset);
                        if (!t) throw ConfigError("[fso] preset: unknown preset '" + preset + "'");
                        c.cfg.fso.alpha = channels::preset(*t).alpha;
                        c.cfg.fso.beta = channels::preset(*t).beta;
                    }
                    c.cfg.fso.xi = xi;
                    const auto det = channels::detection_from_order(r);
                    if (!det) throw ConfigError("[fso] r: detection order must be one of {1,2}");
                    c.cfg.fso.detection = *det;
                    c.cfg.fso.gamma2_bar = channels::db_to_linear(sc.gamma2_db);
                    c.cfg.c_gain = sc.c_gain;
                    out.push_back(c);
                }
            }
            if (sc.alpha) break;
        }
    }
    return out;
}

relay::RelayConfig at_axis(const relay::RelayConfig& cfg, Axis axis, double axis_db)
{
    relay::RelayConfig out = cfg;
    if (axis == Axis::omega_db)
        out.rf.omega = channels::db_to_linear(axis_db);
    else
        out.fso.gamma2_bar = channels::db_to_linear(axis_db);
    return out;
}

} // namespace rfso::cli
