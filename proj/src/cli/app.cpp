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

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "rfso/cli/commands.hpp"
#include "rfso/error.hpp"

namespace rfso::cli {

namespace {

enum Exit { kOk = 0, kUsage = 1, kNumeric = 2, kValidation = 3 };

struct Source {
    std::string config;
    std::string scenario;
};

Scenario resolve(const Source& src, bool for_validate)
{
    if (!src.config.empty() && !src.scenario.empty())
        throw ConfigError("--config and --scenario are mutually exclusive");
    if (!src.config.empty()) return load_scenario(src.config);
    if (!src.scenario.empty()) {
        if (src.scenario == "default-validation") return default_validation_scenario();
        auto sc = find_builtin(src.scenario);
        if (!sc) throw ConfigError("unknown scenario '" + src.scenario + "' (see the scenarios command)");
        return *sc;
    }
    if (for_validate) return default_validation_scenario();
    throw ConfigError("one of --config or --scenario is required");
}

// Writes to `path`, or to `out` when the path is empty or "-".
template <class F>
void emit(const std::string& path, std::ostream& out, F&& write)
{
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError(path + ": cannot open for writing");
    write(f);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dual-hop RF/FSO fixed-gain relay performance metrics", "rfso"};
    app.require_subcommand(1);

    auto* scenarios = app.add_subcommand("scenarios", "List the built-in scenarios");

    PointRequest req;
    std::string preset;
    auto* point = app.add_subcommand("point", "Evaluate one metric for one configuration");
    point->add_option("--metric", req.metric, "op, cdf, pdf, ber, capacity, moment, af, mgf")
        ->check(CLI::IsMember({"op", "cdf", "pdf", "ber", "capacity", "moment", "af", "mgf"}))
        ->capture_default_str();
    point->add_option("--m", req.m, "Nakagami-m fading parameter (integer)")->required();
    point->add_option("--omega-db", req.omega_db, "RF average SNR in dB")->required();
    point->add_option("--preset", preset, "turbulence preset: weak, moderate, strong");
    point->add_option("--alpha", req.alpha, "large-scale scintillation parameter");
    point->add_option("--beta", req.beta, "small-scale scintillation parameter");
    point->add_option("--xi", req.xi, "pointing-error ratio")->required();
    point->add_option("--r", req.r, "detection: 1 heterodyne, 2 IM/DD")->required()->check(CLI::IsMember({1, 2}));
    point->add_option("--gamma2-db", req.gamma2_db, "FSO average SNR in dB")->required();
    point->add_option("--c", req.c_gain, "relay gain constant C")->capture_default_str();
    point->add_option("--gamma-th-db", req.gamma_th_db, "outage threshold (op) or CDF/PDF argument in dB")
        ->capture_default_str();
    point->add_option("--p", req.p, "BER modulation parameter p")->capture_default_str();
    point->add_option("--q", req.q, "BER modulation parameter q")->capture_default_str();
    point->add_option("--n", req.n, "moment or amount-of-fading order")->capture_default_str();
    point->add_option("--s", req.s, "MGF argument")->capture_default_str();
    point->add_option("--path", req.path, "capacity path: egbmgf, quadrature")->capture_default_str();
    point->add_option("--asymptotic", req.asymptotic, "none, all, dominant, dominant-j")->capture_default_str();

    Source sweep_src;
    std::string sweep_out;
    bool sweep_mc = false;
    auto* sweep = app.add_subcommand("sweep", "Emit a CSV curve set for a scenario");
    sweep->add_option("--config", sweep_src.config, "scenario INI file");
    sweep->add_option("--scenario", sweep_src.scenario, "built-in scenario name");
    sweep->add_option("-o,--output", sweep_out, "CSV output file (default stdout)");
    sweep->add_flag("--mc", sweep_mc, "fill the Monte-Carlo columns (uses [mc])");

    Source val_src;
    std::string val_out;
    std::optional<std::uint64_t> val_n, val_ks, val_seed;
    bool corrupt = false;
    auto* val = app.add_subcommand("validate", "Compare analytic metrics with Monte-Carlo estimates");
    val->add_option("--config", val_src.config, "scenario INI file");
    val->add_option("--scenario", val_src.scenario, "built-in scenario name (default: default-validation)");
    val->add_option("-o,--output", val_out, "JSON report file (default stdout)");
    val->add_option("--n-samples", val_n, "metric samples per configuration");
    val->add_option("--ks-samples", val_ks, "samples per KS test");
    val->add_option("--seed", val_seed, "master seed");
    val->add_flag("--corrupt-cdf", corrupt)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* shown = &app;
        for (auto* sub : app.get_subcommands()) shown = sub;
        out << shown->help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        CLI::App* shown = &app;
        for (auto* sub : app.get_subcommands()) shown = sub;
        err << shown->help();
        return kUsage;
    }

    try {
        if (scenarios->parsed()) {
            out << "default-validation\n  " << default_validation_scenario().description << "\n";
            for (const auto& sc : builtin_scenarios()) out << sc.name << "\n  " << sc.description << "\n";
            return kOk;
        }
        if (point->parsed()) {
            if (!preset.empty()) req.preset = preset;
            const auto res = run_point(req);
            out << "metric=" << req.metric << " value=" << format_double(res.value)
                << " err_est=" << format_double(res.error_estimate) << " path=" << relay::to_string(res.path)
                << " terms=" << res.terms_used << "\n";
            return kOk;
        }
        if (sweep->parsed()) {
            Scenario sc = resolve(sweep_src, false);
            if (sweep_mc) {
                if (!sc.mc) throw ConfigError("--mc needs an [mc] section");
                sc.mc->in_sweep = true;
            }
            const auto rows = run_sweep(sc);
            emit(sweep_out, out, [&](std::ostream& o) { write_csv(o, rows); });
            for (const auto& r : rows)
                if (r.error) {
                    err << "numeric failure at " << format_double(r.axis_db) << " dB, " << r.metric << ": "
                        << *r.error << "\n";
                }
            for (const auto& r : rows)
                if (r.error) return kNumeric;
            return kOk;
        }
        if (val->parsed()) {
            Scenario sc = resolve(val_src, true);
            if (!sc.mc) throw ConfigError("validation needs an [mc] section");
            if (val_n) sc.mc->n_samples = *val_n;
            if (val_ks) sc.mc->ks_samples = *val_ks;
            if (val_seed) sc.mc->seed = *val_seed;
            const auto rep = run_validate(sc, {corrupt});
            emit(val_out, out, [&](std::ostream& o) { o << rep.to_json(); });
            if (!rep.passed()) {
                err << "validation failed\n";
                return kValidation;
            }
            return kOk;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kNumeric;
    }
    return kUsage;
}

} // namespace rfso::cli
