// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "ztchain/config.hpp"
#include "ztchain/dapp.hpp"
#include "ztchain/error.hpp"
#include "ztchain/fingerprint.hpp"
#include "ztchain/simnet.hpp"
#include "ztchain/threatsuite.hpp"

namespace ztchain::cli {

namespace {

using nlohmann::json;

struct Common {
    std::optional<std::string> config;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> jit_threshold_ms;
    bool json = false;
};

struct DeviceFlags {
    double lat = 0, lon = 0;
    std::string browser, ip, os_name, os_version, mac;
};

struct Options {
    Common common;
    std::string chain;
    std::string caller;
    std::string email, password, role, role_description, target;
    std::optional<std::int64_t> now_ms;
    DeviceFlags device;
    bool terminate = false;

    // simulate
    std::optional<std::uint32_t> nodes;
    std::optional<std::uint64_t> requests;
    std::optional<std::string> mode;
    std::string csv_path, series_path;
    std::optional<double> flood;

    // threats
    bool all = false;
    std::vector<std::string> ids;
    std::vector<std::string> disabled;
    std::string scenarios;

    // gas-report / replay-table4
    std::string schedule;
    std::string format = "table";
    std::string fixture;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config, "JSON config file (falls back to $ZTCHAIN_CONFIG)");
    cmd->add_option("--seed", c.seed, "PRNG seed");
    cmd->add_option("--jit-threshold-ms", c.jit_threshold_ms, "JIT window length in ms")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", c.json, "Machine-readable output");
}

void add_device(CLI::App* cmd, DeviceFlags& d) {
    cmd->add_option("--lat", d.lat, "Device latitude")->required();
    cmd->add_option("--lon", d.lon, "Device longitude")->required();
    cmd->add_option("--browser", d.browser, "Browser name/version")->required();
    cmd->add_option("--ip", d.ip, "Device IP address")->required();
    cmd->add_option("--os-name", d.os_name, "Operating system")->required();
    cmd->add_option("--os-version", d.os_version, "Operating system version")->required();
    cmd->add_option("--mac", d.mac, "MAC address")->required();
}

AppConfig app_config(const Common& c) {
    AppConfig cfg;
    if (const auto path = resolve_config_path(c.config)) cfg = load_app_config(*path);
    if (c.seed) cfg.simulation.seed = *c.seed;
    if (c.jit_threshold_ms) cfg.jit_threshold_ms = *c.jit_threshold_ms;
    return cfg;
}

DappConfig dapp_config(const AppConfig& app) {
    DappConfig d;
    d.seed = app.simulation.seed;
    d.jit_threshold_ms = app.jit_threshold_ms;
    d.digest = app.digest;
    if (app.gas_schedule) d.schedule = gas::load_schedule(*app.gas_schedule);
    return d;
}

AccountAddress parse_address(const std::string& s) {
    if (s.size() == 42 && (s.starts_with("0x") || s.starts_with("0X"))) return AccountAddress::from_hex(s);
    return AccountAddress::from_label(s);
}

fingerprint::DeviceInfo device_info(const DeviceFlags& f) {
    return {f.lat, f.lon, f.browser, f.ip, f.os_name, f.os_version, f.mac};
}

/// Opens the chain at `path` (or starts one), runs `call`, seals, and
/// writes the chain back, rejected calls included.
template <typename Fn>
CallOutcome with_chain(const Options& o, Fn&& call) {
    const auto app = app_config(o.common);
    auto config = dapp_config(app);
    std::optional<Dapp> dapp;
    if (std::filesystem::exists(o.chain)) {
        dapp.emplace(Dapp::resume(load_chain(o.chain, config.digest), config));
    } else {
        dapp.emplace(config);
    }
    if (o.now_ms) dapp->set_time(*o.now_ms);
    const CallOutcome out = call(*dapp);
    dapp->seal_all();
    save_chain(dapp->chain(), o.chain);
    return out;
}

int report_call(const CallOutcome& c, const Options& o, std::ostream& out, std::ostream& err,
                const std::string& success_text) {
    if (o.common.json) {
        json j = {{"seq", c.seq}, {"status", c.accepted() ? "ACCEPTED" : "REJECTED"}, {"value", c.value}};
        if (c.error) {
            j["error_code"] = std::string(error_name(*c.error));
            j["message"] = std::string(error_message(*c.error));
        }
        if (c.deadline) j["deadline"] = *c.deadline;
        out << j.dump() << "\n";
    } else if (c.accepted()) {
        out << success_text << " (seq " << c.seq << ")\n";
    }
    if (!c.accepted()) {
        err << error_message(*c.error) << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}

int run_simulate(const Options& o, std::ostream& out) {
    auto app = app_config(o.common);
    auto& cfg = app.simulation;
    if (o.nodes) cfg.node_count = *o.nodes;
    if (o.requests) cfg.request_count = *o.requests;
    if (o.mode) cfg.mode = sim::mode_from_name(*o.mode);
    cfg.validate();

    if (o.flood) {
        const auto report = sim::dos_flood(cfg, *o.flood);
        if (o.common.json) {
            out << sim::availability_to_json(report);
        } else {
            char line[200];
            std::snprintf(line, sizeof line,
                          "flood x%.1f: %llu legitimate, %llu flood\nperimeter  success %.4f\nzero-trust success %.4f\n",
                          report.flood_multiplier, static_cast<unsigned long long>(report.legitimate_requests),
                          static_cast<unsigned long long>(report.flood_requests), report.perimeter.success_rate,
                          report.zero_trust.success_rate);
            out << line;
        }
        return kExitOk;
    }

    const auto report = sim::run_simulation(cfg);
    const auto write = [](const std::string& path, const std::string& text) {
        std::ofstream f(path, std::ios::trunc);
        if (!f) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
        f << text;
    };
    if (!o.csv_path.empty()) write(o.csv_path, sim::per_request_csv(report));
    if (!o.series_path.empty()) write(o.series_path, sim::series_csv(report));
    if (o.common.json) {
        out << sim::metrics_to_json(report);
    } else {
        char line[256];
        std::snprintf(line, sizeof line,
                      "mode %s, seed %llu, %zu requests\naverage latency      %.3f ms\ntime per request     %.3f ms\n"
                      "throughput           %.3f req/s\n",
                      std::string(sim::mode_name(report.mode)).c_str(), static_cast<unsigned long long>(report.seed),
                      report.per_request_latency_ms.size(), report.average_latency_ms, report.avg_time_per_request_ms,
                      report.throughput_rps);
        out << line;
    }
    return kExitOk;
}

int run_threats(const Options& o, std::ostream& out, std::ostream& err) {
    Mitigations m;
    for (const auto& name : o.disabled) threats::disable_mitigation(m, name);
    const auto scenarios = o.scenarios.empty() ? threats::load_scenarios() : threats::load_scenarios(o.scenarios);
    threats::ThreatReport report;
    if (o.all || o.ids.empty()) {
        report = threats::run_all(scenarios, m);
    } else {
        for (const auto& id : o.ids) {
            report.results.push_back(threats::run_scenario(scenarios, id, m));
            report.scenarios.push_back(*std::find_if(scenarios.begin(), scenarios.end(),
                                                     [&](const auto& s) { return s.id == id; }));
        }
    }
    out << (o.common.json ? threats::render_json(report) : threats::render_markdown(report));
    if (!report.all_passed()) {
        err << report.results.size() - report.passed() << " scenario(s) failed\n";
        return kExitDomainError;
    }
    return kExitOk;
}

int run_gas_report(const Options& o, std::ostream& out) {
    const auto app = app_config(o.common);
    auto config = dapp_config(app);
    if (!o.schedule.empty()) config.schedule = gas::load_schedule(o.schedule);
    std::optional<Chain> chain;
    if (!o.chain.empty()) {
        chain.emplace(load_chain(o.chain, config.digest));
    } else {
        Dapp dapp(config);
        run_reference_workload(dapp);
        chain.emplace(dapp.chain());
    }
    const auto rows = gas::gas_report(*chain, config.schedule);
    const auto format = o.common.json ? std::string("json") : o.format;
    if (format == "json") out << gas::render_json(rows, config.schedule);
    else if (format == "csv") out << gas::render_csv(rows);
    else out << gas::render_table(rows, config.schedule);
    return kExitOk;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const auto app = app_config(o.common);
    if (!std::filesystem::exists(o.chain)) throw Error(ErrorCode::IoError, "cannot open " + o.chain);
    const auto audit = audit_chain_file(o.chain, app.digest);
    if (o.common.json) {
        json j = {{"ok", audit.intact()}, {"loaded", audit.loaded}, {"reason", audit.report.reason}};
        j["first_bad_index"] = audit.report.first_bad_index ? json(*audit.report.first_bad_index) : json(nullptr);
        out << j.dump() << "\n";
    }
    if (audit.intact()) {
        if (!o.common.json) out << "OK\n";
        return kExitOk;
    }
    if (!audit.loaded) {
        err << audit.load_error << "\n";
    } else {
        err << "TAMPERED: " << audit.report.reason;
        if (audit.report.first_bad_index) err << " at block " << *audit.report.first_bad_index;
        err << "\n";
    }
    return kExitDomainError;
}

int run_reference_replay(const Options& o, std::ostream& out) {
    const auto cmp = o.fixture.empty() ? sim::replay_reference_table() : sim::replay_reference_table(o.fixture);
    out << (o.common.json ? sim::comparison_to_json(cmp) : sim::comparison_to_text(cmp));
    return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero-trust access control on a simulated permissioned ledger", "ztchain"};
    app.require_subcommand(1);
    Options o;

    auto* reg = app.add_subcommand("register", "Register a user bound to a device");
    add_common(reg, o.common);
    reg->add_option("--chain", o.chain, "Chain file (.chain.jsonl)")->required();
    reg->add_option("--email", o.email, "User email")->required();
    reg->add_option("--password", o.password, "Password")->required();
    reg->add_option("--caller", o.caller, "Caller address (0x hex or label); defaults to the email");
    reg->add_option("--now-ms", o.now_ms, "Logical time of the call");
    add_device(reg, o.device);

    auto* role = app.add_subcommand("assign-role", "Assign a role (owner only)");
    add_common(role, o.common);
    role->add_option("--chain", o.chain, "Chain file")->required();
    role->add_option("--email", o.email, "User email")->required();
    role->add_option("--role", o.role, "Role")->required();
    role->add_option("--role-description", o.role_description, "Role description")->required();
    role->add_option("--caller", o.caller, "Caller address (0x hex or label)")->default_val("admin");
    role->add_option("--now-ms", o.now_ms, "Logical time of the call");

    auto* login = app.add_subcommand("login", "Log in with password and device");
    add_common(login, o.common);
    login->add_option("--chain", o.chain, "Chain file")->required();
    login->add_option("--email", o.email, "User email")->required();
    login->add_option("--password", o.password, "Password")->required();
    login->add_option("--caller", o.caller, "Caller address (0x hex or label); defaults to the email");
    login->add_option("--now-ms", o.now_ms, "Logical time of the call");
    add_device(login, o.device);

    auto* jit_start = app.add_subcommand("jit-start", "Open a just-in-time window on a target contract");
    add_common(jit_start, o.common);
    jit_start->add_option("--chain", o.chain, "Chain file")->required();
    jit_start->add_option("--target", o.target, "Target contract (0x hex or label)")->required();
    jit_start->add_option("--caller", o.caller, "Caller address (0x hex or label)")->default_val("admin");
    jit_start->add_option("--now-ms", o.now_ms, "Logical time of the call");

    auto* jit_check = app.add_subcommand("jit-check", "Check (and optionally enforce) a just-in-time window");
    add_common(jit_check, o.common);
    jit_check->add_option("--chain", o.chain, "Chain file")->required();
    jit_check->add_option("--target", o.target, "Target contract (0x hex or label)")->required();
    jit_check->add_option("--caller", o.caller, "Caller address (0x hex or label)")->default_val("admin");
    jit_check->add_option("--now-ms", o.now_ms, "Logical time of the call");
    jit_check->add_flag("--terminate", o.terminate, "Terminate the target if its window has expired");

    auto* simulate = app.add_subcommand("simulate", "Run the latency/throughput simulation");
    add_common(simulate, o.common);
    simulate->add_option("--nodes", o.nodes, "Node count (default 200)");
    simulate->add_option("--requests", o.requests, "Request count");
    simulate->add_option("--mode", o.mode, "zero-trust or perimeter")
        ->check(CLI::IsMember({"zero-trust", "perimeter"}));
    simulate->add_option("--csv", o.csv_path, "Write per-request CSV here");
    simulate->add_option("--series", o.series_path, "Write latency/throughput series CSV here");
    simulate->add_option("--flood", o.flood, "Run the login-flood comparison at this load multiplier");

    auto* threats_cmd = app.add_subcommand("threats", "Run the STRIDE scenario suite");
    add_common(threats_cmd, o.common);
    threats_cmd->add_flag("--all", o.all, "Run every scenario");
    threats_cmd->add_option("--id", o.ids, "Run one scenario (repeatable)");
    threats_cmd->add_option("--disable", o.disabled, "Switch off a mitigation (repeatable)")
        ->check(CLI::IsMember({"device-check", "owner-guard", "jit-window", "chain-verification"}));
    threats_cmd->add_option("--scenarios", o.scenarios, "Scenario file");

    auto* gas_cmd = app.add_subcommand("gas-report", "Gas usage per contract method");
    add_common(gas_cmd, o.common);
    gas_cmd->add_option("--chain", o.chain, "Chain file (default: reference workload)");
    gas_cmd->add_option("--schedule", o.schedule, "Gas schedule JSON");
    gas_cmd->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));

    auto* verify = app.add_subcommand("verify-chain", "Check hashes and links of a chain file");
    add_common(verify, o.common);
    verify->add_option("--chain", o.chain, "Chain file")->required();

    auto* replay_cmd = app.add_subcommand("replay-table4", "Recompute the bundled latency/throughput table");
    add_common(replay_cmd, o.common);
    replay_cmd->add_option("--fixture", o.fixture, "Fixture JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kExitUsage;
    }

    try {
        const auto caller_or = [&](const std::string& fallback) {
            return parse_address(o.caller.empty() ? fallback : o.caller);
        };
        if (reg->parsed()) {
            const auto device = device_info(o.device);
            const auto checksum = fingerprint::checksum(device);
            const auto c = with_chain(o, [&](Dapp& d) {
                return d.register_user(caller_or(o.email), o.email, o.password, checksum, o.device.mac);
            });
            return report_call(c, o, out, err, "registered " + o.email);
        }
        if (role->parsed()) {
            const auto c = with_chain(
                o, [&](Dapp& d) { return d.assign_role(caller_or("admin"), o.email, o.role, o.role_description); });
            return report_call(c, o, out, err, "assigned role " + o.role + " to " + o.email);
        }
        if (login->parsed()) {
            const auto checksum = fingerprint::checksum(device_info(o.device));
            const auto c = with_chain(o, [&](Dapp& d) {
                return d.login(caller_or(o.email), o.email, o.password, checksum, o.device.mac);
            });
            return report_call(c, o, out, err, "login accepted for " + o.email);
        }
        if (jit_start->parsed()) {
            const auto c = with_chain(o, [&](Dapp& d) { return d.start_execution(caller_or("admin"), parse_address(o.target)); });
            return report_call(c, o, out, err,
                               "window open on " + o.target + " until " + std::to_string(c.deadline.value_or(0)) + " ms");
        }
        if (jit_check->parsed()) {
            const auto target = parse_address(o.target);
            const auto c = with_chain(o, [&](Dapp& d) {
                // Terminate hooks live off-chain; the CLI has no running
                // target to halt, so it records the check only.
                auto r = d.is_overtime(caller_or("admin"), target);
                if (o.terminate && r.accepted() && r.value) {
                    jit::HaltableContract halt(target);
                    d.register_target(halt.handle());
                    r = d.terminate_execution(caller_or("admin"), target);
                }
                return r;
            });
            const std::string text = o.terminate && c.termination
                                         ? "window expired; " + o.target + " terminated"
                                         : (c.value ? "window expired for " : "within window for ") + o.target;
            return report_call(c, o, out, err, text);
        }
        if (simulate->parsed()) return run_simulate(o, out);
        if (threats_cmd->parsed()) return run_threats(o, out, err);
        if (gas_cmd->parsed()) return run_gas_report(o, out);
        if (verify->parsed()) return run_verify(o, out, err);
        if (replay_cmd->parsed()) return run_reference_replay(o, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace ztchain::cli
