// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/threatsuite.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "ztchain/digest.hpp"
#include "ztchain/fingerprint.hpp"
#include "ztchain/perimeter.hpp"
#include "ztchain/simnet.hpp"

namespace ztchain::threats {

using nlohmann::json;

namespace {

const std::set<std::string, std::less<>> kOps = {
    "register", "assign_role", "login",          "get_all_users",   "jit_start", "advance", "jit_terminate",
    "target_running", "seal",  "tamper", "audit_timestamps", "flood",
};

constexpr std::string_view kAccepted = "ACCEPTED";

struct Actor {
    std::string name;
    AccountAddress address;
    fingerprint::DeviceInfo device;
    std::string checksum;
};

struct Outcome {
    std::string code;
    std::optional<std::uint64_t> seq;
    std::string note;
};

std::string code_of(const Error& e) { return std::string(error_name(e.code())); }

class Stack {
public:
    virtual ~Stack() = default;
    virtual Outcome register_user(const Actor& a, const std::string& email, const std::string& password) = 0;
    virtual Outcome assign_role(const Actor& a, const std::string& email, const std::string& role,
                                const std::string& description) = 0;
    virtual Outcome login(const Actor& a, const std::string& email, const std::string& password) = 0;
    virtual Outcome get_all_users(const Actor& a, std::string& rendered) = 0;
    virtual Outcome jit_start(const Actor& a, const std::string& target) = 0;
    virtual Outcome jit_terminate(const Actor& a, const std::string& target) = 0;
    virtual bool target_running(const std::string& target) = 0;
    virtual void advance(std::int64_t ms) = 0;
    virtual void seal() = 0;
    virtual Outcome tamper(const std::string& operation, const std::string& field, const std::string& value) = 0;
    virtual Outcome audit_timestamps() = 0;
    virtual std::vector<std::string> exported_reports() = 0;
    virtual bool ledger_confirms(std::uint64_t seq, const std::string& code) = 0;
    virtual double flood_success(const sim::AvailabilityReport& report) = 0;
    virtual bool is_baseline() const = 0;
};

std::filesystem::path scratch_file() {
    static std::atomic<unsigned> counter{0};
    return std::filesystem::temp_directory_path() /
           ("ztchain-threat-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".chain.jsonl");
}

class ZeroTrustStack final : public Stack {
public:
    explicit ZeroTrustStack(const Mitigations& m) : dapp_(make_config(m)) {}

    Outcome register_user(const Actor& a, const std::string& email, const std::string& password) override {
        return track(a, dapp_.register_user(a.address, email, password, a.checksum, a.device.mac));
    }
    Outcome assign_role(const Actor& a, const std::string& email, const std::string& role,
                        const std::string& description) override {
        return track(a, dapp_.assign_role(a.address, email, role, description));
    }
    Outcome login(const Actor& a, const std::string& email, const std::string& password) override {
        return track(a, dapp_.login(a.address, email, password, a.checksum, a.device.mac));
    }
    Outcome get_all_users(const Actor& a, std::string& rendered) override {
        auto [out, users] = dapp_.get_all_users(a.address);
        rendered = mfa::render_users_json(users);
        return track(a, out);
    }
    Outcome jit_start(const Actor& a, const std::string& target) override {
        return track(a, dapp_.start_execution(a.address, target_address(target)));
    }
    Outcome jit_terminate(const Actor& a, const std::string& target) override {
        const auto out = dapp_.terminate_execution(a.address, target_address(target));
        auto o = track(a, out);
        if (out.accepted()) o.code = out.value ? "terminated" : "not_overtime";
        return o;
    }
    bool target_running(const std::string& target) override {
        target_address(target);
        return targets_.at(target).running();
    }
    void advance(std::int64_t ms) override { dapp_.advance(ms); }
    void seal() override { dapp_.seal_all(); }

    Outcome tamper(const std::string& operation, const std::string& field, const std::string& value) override {
        dapp_.seal_all();
        const auto path = scratch_file();
        save_chain(dapp_.chain(), path);

        std::vector<std::string> lines;
        {
            std::ifstream in(path);
            for (std::string line; std::getline(in, line);) lines.push_back(line);
        }
        Outcome o;
        // Newest matching transaction, searched from the head backwards.
        for (auto line = lines.rbegin(); line != lines.rend() && !o.seq; ++line) {
            json block = json::parse(*line);
            auto& txs = block["transactions"];
            for (auto tx = txs.rbegin(); tx != txs.rend(); ++tx) {
                if ((*tx)["operation"] != operation) continue;
                if (field.starts_with("payload.")) (*tx)["payload"][field.substr(8)] = value;
                else (*tx)[field] = value;
                o.seq = (*tx)["seq"].get<std::uint64_t>();
                *line = block.dump();
                break;
            }
        }
        if (!o.seq) {
            std::filesystem::remove(path);
            o.code = "NO_TARGET";
            o.note = "no " + operation + " transaction on the ledger";
            return o;
        }
        {
            std::ofstream out(path, std::ios::trunc);
            for (const auto& l : lines) out << l << '\n';
        }

        const auto audit = audit_chain_file(path, dapp_.config().mitigations);
        o.code = audit.intact() ? "UNDETECTED" : "DETECTED";
        if (!audit.intact()) {
            o.note = audit.report.reason;
            if (audit.report.first_bad_index) o.note += " at block " + std::to_string(*audit.report.first_bad_index);
        }
        try {
            const auto replayed = replay_state(load_chain(path).all_transactions(), dapp_.config());
            if (!(replayed.state == dapp_.snapshot()) || !replayed.divergent_seqs.empty()) {
                o.note += o.note.empty() ? "" : "; ";
                o.note += "replayed state diverges from live state";
            }
        } catch (const Error& e) {
            o.note += o.note.empty() ? "" : "; ";
            o.note += e.what();
        }
        std::filesystem::remove(path);
        return o;
    }

    Outcome audit_timestamps() override {
        dapp_.seal_all();
        std::map<std::uint64_t, const Transaction*> committed;
        for (const auto& b : dapp_.chain().blocks()) {
            for (const auto& tx : b.transactions) committed[tx.seq] = &tx;
        }
        std::size_t stamped = 0;
        for (const auto& op : ops_) {
            const auto it = committed.find(op.seq);
            if (it != committed.end() && it->second->caller == op.caller && it->second->logical_time == op.time) {
                ++stamped;
            }
        }
        Outcome o;
        o.code = stamped == ops_.size() ? "ALL_STAMPED" : "UNSTAMPED";
        o.note = std::to_string(stamped) + "/" + std::to_string(ops_.size()) + " operations on the ledger with caller and time";
        return o;
    }

    std::vector<std::string> exported_reports() override {
        dapp_.seal_all();
        const auto rows = gas::gas_report(dapp_.chain(), dapp_.config().schedule);
        return {gas::render_table(rows, dapp_.config().schedule), gas::render_csv(rows),
                gas::render_json(rows, dapp_.config().schedule)};
    }

    bool ledger_confirms(std::uint64_t seq, const std::string& code) override {
        dapp_.seal_all();
        for (const auto& b : dapp_.chain().blocks()) {
            for (const auto& tx : b.transactions) {
                if (tx.seq != seq) continue;
                if (tx.status == TxStatus::Accepted) return code == kAccepted || code == "terminated" ||
                                                            code == "not_overtime";
                return tx.error_code && error_name(*tx.error_code) == code;
            }
        }
        return false;
    }

    double flood_success(const sim::AvailabilityReport& r) override { return r.zero_trust.success_rate; }
    bool is_baseline() const override { return false; }

private:
    struct Op {
        std::uint64_t seq;
        AccountAddress caller;
        std::int64_t time;
    };

    static DappConfig make_config(const Mitigations& m) {
        DappConfig c;
        c.mitigations = m;
        return c;
    }

    Outcome track(const Actor& a, const CallOutcome& out) {
        ops_.push_back({out.seq, a.address, dapp_.now()});
        return {out.accepted() ? std::string(kAccepted) : std::string(error_name(*out.error)), out.seq, {}};
    }

    AccountAddress target_address(const std::string& label) {
        auto it = targets_.find(label);
        if (it == targets_.end()) {
            it = targets_.emplace(label, jit::HaltableContract(AccountAddress::from_label(label))).first;
            dapp_.register_target(it->second.handle());
        }
        return it->second.address();
    }

    Dapp dapp_;
    std::map<std::string, jit::HaltableContract> targets_;
    std::vector<Op> ops_;
};

/// Central server: password check only, no owner guard, standing
/// privileges, and a mutable log.
class PerimeterStack final : public Stack {
public:
    Outcome register_user(const Actor& a, const std::string& email, const std::string& password) override {
        return call(a, [&] { server_.register_user(a.name, email, password); });
    }
    Outcome assign_role(const Actor& a, const std::string& email, const std::string& role,
                        const std::string& description) override {
        return call(a, [&] { server_.assign_role(a.name, email, role, description); });
    }
    Outcome login(const Actor& a, const std::string& email, const std::string& password) override {
        return call(a, [&] { server_.login(a.name, email, password); });
    }
    Outcome get_all_users(const Actor& a, std::string& rendered) override {
        return call(a, [&] { rendered = perimeter::render_users_json(server_.get_all_users(a.name)); });
    }
    Outcome jit_start(const Actor&, const std::string& target) override {
        running_[target] = true;
        return {std::string(kAccepted), std::nullopt, "standing privilege"};
    }
    Outcome jit_terminate(const Actor&, const std::string&) override {
        return {"not_overtime", std::nullopt, "no privilege window to enforce"};
    }
    bool target_running(const std::string& target) override { return running_[target]; }
    void advance(std::int64_t ms) override {
        now_ += ms;
        server_.set_time(now_);
    }
    void seal() override {}

    Outcome tamper(const std::string& operation, const std::string& field, const std::string& value) override {
        auto& log = server_.audit_log();
        for (auto it = log.rbegin(); it != log.rend(); ++it) {
            if (it->action != operation) continue;
            if (field == "caller") it->actor = value;
            else it->detail = value;
            if (operation == "assignRole") {
                for (auto& [email, rec] : server_.records()) {
                    if (it->detail.starts_with(email)) rec.role = value;
                }
            }
            return {"UNDETECTED", std::nullopt, "log entry " + std::to_string(it->index) + " edited in place"};
        }
        return {"NO_TARGET", std::nullopt, {}};
    }

    Outcome audit_timestamps() override {
        const auto& log = server_.audit_log();
        std::size_t stamped = 0;
        for (const auto& op : ops_) {
            if (op.index < log.size() && log[op.index].actor == op.actor && log[op.index].time == op.time) ++stamped;
        }
        return {stamped == ops_.size() ? "ALL_STAMPED" : "UNSTAMPED", std::nullopt,
                std::to_string(stamped) + "/" + std::to_string(ops_.size()) + " operations in the server log"};
    }

    std::vector<std::string> exported_reports() override {
        std::vector<std::string> out;
        for (const auto& e : server_.audit_log()) out.push_back(e.actor + " " + e.action + " " + e.detail);
        return out;
    }

    bool ledger_confirms(std::uint64_t, const std::string&) override { return true; }
    double flood_success(const sim::AvailabilityReport& r) override { return r.perimeter.success_rate; }
    bool is_baseline() const override { return true; }

private:
    struct Op {
        std::size_t index;
        std::string actor;
        std::int64_t time;
    };

    template <typename Fn>
    Outcome call(const Actor& a, Fn&& fn) {
        const auto before = server_.audit_log().size();
        try {
            fn();
        } catch (const Error& e) {
            return {code_of(e), std::nullopt, {}};
        }
        if (server_.audit_log().size() > before) ops_.push_back({before, a.name, now_});
        return {std::string(kAccepted), std::nullopt, {}};
    }

    perimeter::PerimeterAuthServer server_;
    std::map<std::string, bool> running_;
    std::vector<Op> ops_;
    std::int64_t now_ = 0;
};

fingerprint::DeviceInfo device_from_json(const json& j) {
    fingerprint::DeviceInfo d;
    d.latitude = j.at("latitude").get<double>();
    d.longitude = j.at("longitude").get<double>();
    d.browser = j.at("browser").get<std::string>();
    d.ip = j.at("ip").get<std::string>();
    d.os_name = j.at("os_name").get<std::string>();
    d.os_version = j.at("os_version").get<std::string>();
    d.mac = j.at("mac").get<std::string>();
    return d;
}

std::map<std::string, Actor> resolve_actors(const json& actors) {
    std::map<std::string, Actor> out;
    for (const auto& [name, entry] : actors.items()) {
        Actor a;
        a.name = name;
        a.address = AccountAddress::from_label(entry.at("node").get<std::string>());
        a.device = device_from_json(entry.at("device"));
        a.checksum = fingerprint::checksum(a.device);
        out.emplace(name, std::move(a));
    }
    return out;
}

struct RunLog {
    std::vector<Evidence> evidence;
    std::vector<std::string> failures;
};

class Runner {
public:
    Runner(const ThreatScenario& s, Stack& stack) : scenario_(s), stack_(stack), actors_(resolve_actors(s.actors)) {}

    RunLog run() {
        for (std::size_t i = 0; i < scenario_.steps.size(); ++i) step(i, scenario_.steps[i]);
        stack_.seal();
        for (const auto& e : log_.evidence) {
            const bool status_code = e.code == kAccepted || e.code == "terminated" || e.code == "not_overtime" ||
                                     error_from_name(e.code).has_value();
            if (e.seq && status_code && !stack_.ledger_confirms(*e.seq, e.code)) {
                log_.failures.push_back("seq " + std::to_string(*e.seq) + " is not on the ledger as " + e.code);
            }
        }
        return log_;
    }

private:
    const Actor& actor(const json& args) const {
        const auto name = args.at("actor").get<std::string>();
        const auto it = actors_.find(name);
        if (it == actors_.end()) throw Error(ErrorCode::FormatError, scenario_.id + ": unknown actor '" + name + "'");
        return it->second;
    }

    static std::string str(const json& args, const char* key) { return args.at(key).get<std::string>(); }

    void expect(std::size_t index, const std::string& op, Outcome o, const std::string& wanted) {
        if (o.code != wanted) {
            log_.failures.push_back("step " + std::to_string(index + 1) + " " + op + ": expected " + wanted + ", got " +
                                    o.code);
        }
        log_.evidence.push_back({o.seq, o.code, op + (o.note.empty() ? "" : ": " + o.note)});
    }

    void step(std::size_t i, const Step& s) {
        const auto& a = s.args;
        const auto wanted = a.contains("expect") && a.at("expect").is_string() ? str(a, "expect")
                                                                                 : std::string(kAccepted);
        if (s.op == "register") {
            const auto password = str(a, "password");
            secrets_.insert(password);
            secrets_.insert(digest_hex(password, DigestAlgorithm::Sha256));
            secrets_.insert(digest_hex(password, DigestAlgorithm::Sha3_256));
            expect(i, s.op, stack_.register_user(actor(a), str(a, "email"), password), wanted);
        } else if (s.op == "assign_role") {
            expect(i, s.op,
                   stack_.assign_role(actor(a), str(a, "email"), str(a, "role"), str(a, "role_description")), wanted);
        } else if (s.op == "login") {
            expect(i, s.op, stack_.login(actor(a), str(a, "email"), str(a, "password")), wanted);
        } else if (s.op == "get_all_users") {
            std::string rendered;
            auto o = stack_.get_all_users(actor(a), rendered);
            if (a.value("scan_secrets", false) && o.code == kAccepted) {
                auto texts = stack_.exported_reports();
                texts.push_back(rendered);
                std::size_t leaks = 0;
                for (const auto& t : texts) {
                    for (const auto& secret : secrets_) leaks += t.find(secret) != std::string::npos;
                }
                if (leaks > 0) {
                    o.code = "SECRET_EXPOSED";
                    o.note = std::to_string(leaks) + " password or digest occurrences in exported output";
                } else {
                    o.note = "no password or digest in " + std::to_string(texts.size()) + " exported outputs";
                }
            }
            expect(i, s.op, o, wanted);
        } else if (s.op == "jit_start") {
            expect(i, s.op, stack_.jit_start(actor(a), str(a, "target")), wanted);
        } else if (s.op == "advance") {
            stack_.advance(a.at("ms").get<std::int64_t>());
        } else if (s.op == "jit_terminate") {
            expect(i, s.op, stack_.jit_terminate(actor(a), str(a, "target")), wanted);
        } else if (s.op == "target_running") {
            const bool running = stack_.target_running(str(a, "target"));
            const bool want = a.at("expect").get<bool>();
            if (running != want) {
                log_.failures.push_back("step " + std::to_string(i + 1) + " target_running: expected " +
                                        (want ? "true" : "false"));
            }
            log_.evidence.push_back({std::nullopt, running ? "RUNNING" : "HALTED", "target " + str(a, "target")});
        } else if (s.op == "seal") {
            stack_.seal();
        } else if (s.op == "tamper") {
            // "@name" stands for that actor's identity on the stack under test.
            auto value = str(a, "value");
            if (value.starts_with("@")) {
                const auto& who = actor(json{{"actor", value.substr(1)}});
                value = stack_.is_baseline() ? who.name : who.address.hex();
            }
            expect(i, s.op, stack_.tamper(str(a, "operation"), str(a, "field"), value), wanted);
        } else if (s.op == "audit_timestamps") {
            expect(i, s.op, stack_.audit_timestamps(), wanted);
        } else if (s.op == "flood") {
            sim::SimConfig config;
            config.node_count = a.value("nodes", config.node_count);
            config.request_count = a.value("requests", config.request_count);
            config.seed = a.value("seed", config.seed);
            const auto report = sim::dos_flood(config, a.at("multiplier").get<double>());
            const double rate = stack_.flood_success(report);
            const double floor = a.at("min_success").get<double>();
            char note[160];
            std::snprintf(note, sizeof note, "x%.0f flood: perimeter %.3f, zero-trust %.3f legitimate success",
                          report.flood_multiplier, report.perimeter.success_rate, report.zero_trust.success_rate);
            const bool ok = rate >= floor && (stack_.is_baseline() ||
                                              report.zero_trust.success_rate > report.perimeter.success_rate);
            if (!ok) log_.failures.push_back("step " + std::to_string(i + 1) + " flood: availability below floor");
            log_.evidence.push_back({std::nullopt, ok ? "AVAILABLE" : "DEGRADED", note});
        }
    }

    const ThreatScenario& scenario_;
    Stack& stack_;
    std::map<std::string, Actor> actors_;
    std::set<std::string> secrets_;
    RunLog log_;
};

const ThreatScenario& find(const std::vector<ThreatScenario>& scenarios, std::string_view id) {
    const auto it = std::find_if(scenarios.begin(), scenarios.end(), [&](const auto& s) { return s.id == id; });
    if (it == scenarios.end()) throw Error(ErrorCode::UnknownScenario, std::string(id));
    return *it;
}

json evidence_json(const std::vector<Evidence>& evidence) {
    json arr = json::array();
    for (const auto& e : evidence) {
        json j = {{"code", e.code}, {"note", e.note}};
        j["seq"] = e.seq ? json(*e.seq) : json(nullptr);
        arr.push_back(j);
    }
    return arr;
}

std::string escape_cell(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

}  // namespace

std::size_t ThreatReport::passed() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; }));
}

std::filesystem::path default_scenario_file() {
    return std::filesystem::path(ZTCHAIN_RESOURCE_DIR) / "threats" / "stride.json";
}

std::vector<ThreatScenario> parse_scenarios(std::string_view text) {
    std::vector<ThreatScenario> out;
    try {
        const json doc = json::parse(text);
        for (const auto& j : doc.at("scenarios")) {
            ThreatScenario s;
            s.id = j.at("id").get<std::string>();
            s.title = j.at("title").get<std::string>();
            s.description = j.at("description").get<std::string>();
            s.expected_mitigation = j.at("expected_mitigation").get<std::string>();
            s.expected_verdict = j.at("expected_verdict").get<std::string>();
            s.actors = j.value("actors", json::object());
            for (const auto& st : j.at("steps")) {
                Step step{st.at("op").get<std::string>(), st};
                if (!kOps.contains(step.op)) {
                    throw Error(ErrorCode::FormatError, s.id + ": unknown step op '" + step.op + "'");
                }
                s.steps.push_back(std::move(step));
            }
            resolve_actors(s.actors);
            out.push_back(std::move(s));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::FormatError, e.what());
    }
    std::set<std::string> ids;
    for (const auto& s : out) {
        if (!ids.insert(s.id).second) throw Error(ErrorCode::FormatError, "duplicate scenario " + s.id);
    }
    for (int k = 1; k <= 7; ++k) {
        if (!ids.contains("T-" + std::to_string(k))) {
            throw Error(ErrorCode::FormatError, "missing scenario T-" + std::to_string(k));
        }
    }
    return out;
}

std::vector<ThreatScenario> load_scenarios(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenarios(buf.str());
}

ScenarioResult run_scenario(const std::vector<ThreatScenario>& scenarios, std::string_view id,
                            const Mitigations& mitigations) {
    const auto& scenario = find(scenarios, id);
    ScenarioResult result;
    result.id = scenario.id;

    ZeroTrustStack zt(mitigations);
    auto live = Runner(scenario, zt).run();
    result.pass = live.failures.empty() && !live.evidence.empty();
    result.observed_verdict = result.pass ? scenario.expected_verdict : std::string(kFailed);
    result.evidence = std::move(live.evidence);
    result.failures = std::move(live.failures);

    PerimeterStack baseline;
    auto base = Runner(scenario, baseline).run();
    result.baseline_verdict = base.failures.empty() ? kResisted : kVulnerable;
    result.baseline_evidence = std::move(base.evidence);
    return result;
}

ScenarioResult run_scenario(std::string_view id, const Mitigations& mitigations) {
    return run_scenario(load_scenarios(), id, mitigations);
}

ThreatReport run_all(const std::vector<ThreatScenario>& scenarios, const Mitigations& mitigations) {
    ThreatReport report;
    report.scenarios = scenarios;
    std::sort(report.scenarios.begin(), report.scenarios.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& s : report.scenarios) report.results.push_back(run_scenario(scenarios, s.id, mitigations));
    return report;
}

ThreatReport run_all(const Mitigations& mitigations) { return run_all(load_scenarios(), mitigations); }

std::string render_markdown(const ThreatReport& report) {
    std::ostringstream out;
    out << "| Threat ID | Description | Expected mitigation | Observed verdict | Perimeter baseline |\n";
    out << "|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        const auto& s = report.scenarios[i];
        const auto& r = report.results[i];
        out << "| " << r.id << " | " << escape_cell(s.title + ": " + s.description) << " | "
            << escape_cell(s.expected_mitigation) << " | " << r.observed_verdict << " | " << r.baseline_verdict
            << " |\n";
    }
    out << "\n" << report.passed() << "/" << report.results.size() << " scenarios passed\n";
    for (const auto& r : report.results) {
        for (const auto& f : r.failures) out << "- " << r.id << ": " << f << "\n";
    }
    return out.str();
}

std::string render_json(const ThreatReport& report) {
    json j;
    j["passed"] = report.passed();
    j["total"] = report.results.size();
    j["scenarios"] = json::array();
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        const auto& s = report.scenarios[i];
        const auto& r = report.results[i];
        j["scenarios"].push_back({{"id", r.id},
                                  {"title", s.title},
                                  {"description", s.description},
                                  {"expected_mitigation", s.expected_mitigation},
                                  {"expected_verdict", s.expected_verdict},
                                  {"observed_verdict", r.observed_verdict},
                                  {"pass", r.pass},
                                  {"baseline_verdict", r.baseline_verdict},
                                  {"evidence", evidence_json(r.evidence)},
                                  {"baseline_evidence", evidence_json(r.baseline_evidence)},
                                  {"failures", r.failures}});
    }
    return j.dump(2) + "\n";
}

void disable_mitigation(Mitigations& m, std::string_view name) {
    if (name == "device-check") m.device_check = false;
    else if (name == "owner-guard") m.owner_guard = false;
    else if (name == "jit-window") m.jit_window = false;
    else if (name == "chain-verification") m.chain_verification = false;
    else throw Error(ErrorCode::ConfigError, "unknown mitigation '" + std::string(name) + "'");
}

}  // namespace ztchain::threats
