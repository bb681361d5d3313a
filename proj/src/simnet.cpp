// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/simnet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <memory>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include "ztchain/dapp.hpp"
#include "ztchain/digest.hpp"
#include "ztchain/error.hpp"
#include "ztchain/perimeter.hpp"

namespace ztchain::sim {

using nlohmann::json;

std::string_view mode_name(Mode mode) { return mode == Mode::ZeroTrust ? "zero-trust" : "perimeter"; }

Mode mode_from_name(std::string_view name) {
    if (name == "zero-trust" || name == "ZERO_TRUST") return Mode::ZeroTrust;
    if (name == "perimeter" || name == "PERIMETER") return Mode::Perimeter;
    throw Error(ErrorCode::ConfigError, "unknown mode '" + std::string(name) + "'");
}

double Distribution::sample(SplitMix64& rng) const {
    switch (kind) {
        case Kind::Constant: return a;
        case Kind::Uniform: return rng.uniform(a, b);
        case Kind::Exponential: return -a * std::log1p(-rng.uniform());
    }
    return a;
}

double Distribution::mean() const { return kind == Kind::Uniform ? 0.5 * (a + b) : a; }

void Distribution::validate(std::string_view stage) const {
    const bool ok = std::isfinite(a) && std::isfinite(b) && a > 0 && (kind != Kind::Uniform || b >= a);
    if (!ok) throw Error(ErrorCode::ConfigError, std::string(stage) + ": distribution parameters must be positive");
}

void SimConfig::validate() const {
    if (node_count < 1) throw Error(ErrorCode::ConfigError, "node_count must be >= 1");
    if (request_count < 1) throw Error(ErrorCode::ConfigError, "request_count must be >= 1");
    if (concurrency < 1) throw Error(ErrorCode::ConfigError, "concurrency must be >= 1");
    latency.network_hop.validate("network_hop");
    latency.contract_execution.validate("contract_execution");
    latency.consensus_validation.validate("consensus_validation");
    latency.central_lookup.validate("central_lookup");
    if (!stakes.empty()) {
        try {
            StakeTable check(stakes);
        } catch (const Error& e) {
            throw Error(ErrorCode::ConfigError, e.what());
        }
    }
}

namespace {

json dist_to_json(const Distribution& d) {
    switch (d.kind) {
        case Distribution::Kind::Constant: return {{"kind", "constant"}, {"value", d.a}};
        case Distribution::Kind::Uniform: return {{"kind", "uniform"}, {"min", d.a}, {"max", d.b}};
        case Distribution::Kind::Exponential: return {{"kind", "exponential"}, {"mean", d.a}};
    }
    return {};
}

Distribution dist_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "constant") return Distribution::constant(j.at("value").get<double>());
    if (kind == "uniform") return Distribution::uniform(j.at("min").get<double>(), j.at("max").get<double>());
    if (kind == "exponential") return Distribution::exponential(j.at("mean").get<double>());
    throw Error(ErrorCode::ConfigError, "unknown distribution kind '" + kind + "'");
}

}  // namespace

SimConfig config_from_json(std::string_view text) {
    SimConfig c;
    try {
        const json j = json::parse(text);
        c.node_count = j.value("node_count", c.node_count);
        c.request_count = j.value("request_count", c.request_count);
        c.seed = j.value("seed", c.seed);
        if (j.contains("mode")) c.mode = mode_from_name(j.at("mode").get<std::string>());
        c.concurrency = j.value("concurrency", c.concurrency);
        c.stakes = j.value("stakes", c.stakes);
        if (j.contains("latency_model")) {
            const auto& m = j.at("latency_model");
            if (m.contains("network_hop")) c.latency.network_hop = dist_from_json(m.at("network_hop"));
            if (m.contains("contract_execution")) c.latency.contract_execution = dist_from_json(m.at("contract_execution"));
            if (m.contains("consensus_validation")) {
                c.latency.consensus_validation = dist_from_json(m.at("consensus_validation"));
            }
            if (m.contains("central_lookup")) c.latency.central_lookup = dist_from_json(m.at("central_lookup"));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ConfigError, e.what());
    }
    c.validate();
    return c;
}

std::string config_to_json(const SimConfig& c) {
    json j;
    j["node_count"] = c.node_count;
    j["request_count"] = c.request_count;
    j["seed"] = c.seed;
    j["mode"] = std::string(mode_name(c.mode));
    j["concurrency"] = c.concurrency;
    j["stakes"] = c.stakes;
    j["latency_model"] = {{"network_hop", dist_to_json(c.latency.network_hop)},
                          {"contract_execution", dist_to_json(c.latency.contract_execution)},
                          {"consensus_validation", dist_to_json(c.latency.consensus_validation)},
                          {"central_lookup", dist_to_json(c.latency.central_lookup)}};
    return j.dump(2) + "\n";
}

SimConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return config_from_json(buf.str());
}

MetricsReport compute_metrics(std::span<const double> latencies, std::span<const double> completion_times) {
    if (latencies.empty() || completion_times.empty()) throw Error(ErrorCode::EmptyInput);
    MetricsReport r;
    r.per_request_latency_ms.assign(latencies.begin(), latencies.end());
    r.completion_times_ms.assign(completion_times.begin(), completion_times.end());
    r.average_latency_ms = std::accumulate(latencies.begin(), latencies.end(), 0.0) / static_cast<double>(latencies.size());
    const double makespan = *std::max_element(completion_times.begin(), completion_times.end());
    r.avg_time_per_request_ms = makespan / static_cast<double>(completion_times.size());
    r.throughput_rps = 1000.0 / r.avg_time_per_request_ms;
    r.served = completion_times.size();
    return r;
}

namespace {

using Micros = std::int64_t;

Micros to_us(double ms) { return static_cast<Micros>(std::llround(ms * 1000.0)); }

enum class Stage { Arrive, ServiceDone, ValidationDone, Reply };

struct Event {
    Micros time;
    std::uint64_t order;  // insertion sequence; breaks time ties
    Stage stage;
    std::uint64_t request;

    bool operator>(const Event& o) const { return std::tie(time, order) > std::tie(o.time, o.order); }
};

struct FifoServer {
    bool busy = false;
    std::deque<std::uint64_t> queue;
};

class Simulation {
public:
    explicit Simulation(const SimConfig& config)
        : config_(config), rng_(config.seed, /*stream=*/1), route_rng_(config.seed, /*stream=*/2) {
        nodes_.resize(config.node_count);
        issue_time_.resize(config.request_count);
        user_of_.resize(config.request_count);
        if (config.mode == Mode::ZeroTrust) setup_dapp();
        else setup_perimeter();
    }

    MetricsReport run() {
        const auto first = std::min<std::uint64_t>(config_.concurrency, config_.request_count);
        for (std::uint64_t i = 0; i < first; ++i) issue(0);
        while (!events_.empty()) {
            const Event ev = events_.top();
            events_.pop();
            dispatch(ev);
        }
        auto report = compute_metrics(latencies_, completions_);
        report.mode = config_.mode;
        report.seed = config_.seed;
        report.dropped = config_.request_count - report.served;
        if (dapp_) report.blocks_sealed = blocks_sealed_;
        return report;
    }

private:
    static std::string user_label(std::uint32_t node) { return "node-" + std::to_string(node); }
    static std::string email_of(std::uint32_t node) { return user_label(node) + "@securefinance.example"; }
    static std::string password_of(std::uint32_t node) { return "pw-" + user_label(node); }
    static std::string checksum_of(std::uint32_t node) { return digest_hex("device:" + user_label(node)); }
    static std::string mac_of(std::uint32_t node) {
        char buf[18];
        std::snprintf(buf, sizeof buf, "02:00:00:00:%02x:%02x", (node >> 8) & 0xff, node & 0xff);
        return buf;
    }

    void setup_dapp() {
        DappConfig dc;
        dc.seed = config_.seed;
        dc.stakes = config_.stakes.empty() ? std::vector<std::uint64_t>(config_.node_count, 32) : config_.stakes;
        dapp_ = std::make_unique<Dapp>(dc);
        for (std::uint32_t n = 0; n < config_.node_count; ++n) {
            const auto addr = AccountAddress::from_label(user_label(n));
            addresses_.push_back(addr);
            dapp_->register_user(addr, email_of(n), password_of(n), checksum_of(n), mac_of(n));
            dapp_->assign_role(dc.owner, email_of(n), "Staff", "Authenticated staff member");
        }
        dapp_->seal_all();
    }

    void setup_perimeter() {
        central_ = std::make_unique<perimeter::PerimeterAuthServer>();
        for (std::uint32_t n = 0; n < config_.node_count; ++n) {
            central_->register_user("admin", email_of(n), password_of(n));
        }
    }

    void schedule(Micros time, Stage stage, std::uint64_t request) { events_.push({time, order_++, stage, request}); }

    void issue(Micros now) {
        const auto id = issued_++;
        issue_time_[id] = now;
        user_of_[id] = static_cast<std::uint32_t>(route_rng_.below(config_.node_count));
        schedule(now + to_us(config_.latency.network_hop.sample(rng_)), Stage::Arrive, id);
    }

    FifoServer& intake_server(std::uint64_t request) {
        return config_.mode == Mode::ZeroTrust ? nodes_[user_of_[request]] : central_server_;
    }

    void start_service(FifoServer& server, Micros now, std::uint64_t request) {
        server.busy = true;
        const auto& d = config_.mode == Mode::ZeroTrust ? config_.latency.contract_execution
                                                        : config_.latency.central_lookup;
        schedule(now + to_us(d.sample(rng_)), Stage::ServiceDone, request);
    }

    void start_validation(Micros now, std::uint64_t request) {
        validator_.busy = true;
        schedule(now + to_us(config_.latency.consensus_validation.sample(rng_)), Stage::ValidationDone, request);
    }

    static void enqueue(FifoServer& server, std::uint64_t request, const std::function<void()>& start) {
        if (server.busy) server.queue.push_back(request);
        else start();
    }

    template <typename Start>
    static void release(FifoServer& server, Start&& start) {
        server.busy = false;
        if (!server.queue.empty()) {
            const auto next = server.queue.front();
            server.queue.pop_front();
            start(next);
        }
    }

    void authenticate(Micros now, std::uint64_t request) {
        const auto n = user_of_[request];
        if (dapp_) {
            dapp_->set_time(now / 1000);
            dapp_->login(addresses_[n], email_of(n), password_of(n), checksum_of(n), mac_of(n));
        } else {
            central_->set_time(now / 1000);
            central_->login("staff", email_of(n), password_of(n));
        }
    }

    void dispatch(const Event& ev) {
        const Micros now = ev.time;
        const auto req = ev.request;
        switch (ev.stage) {
            case Stage::Arrive: {
                auto& server = intake_server(req);
                enqueue(server, req, [&] { start_service(server, now, req); });
                break;
            }
            case Stage::ServiceDone: {
                authenticate(now, req);
                auto& server = intake_server(req);
                release(server, [&](std::uint64_t next) { start_service(server, now, next); });
                if (config_.mode == Mode::ZeroTrust) {
                    enqueue(validator_, req, [&] { start_validation(now, req); });
                } else {
                    schedule(now + to_us(config_.latency.network_hop.sample(rng_)), Stage::Reply, req);
                }
                break;
            }
            case Stage::ValidationDone: {
                dapp_->set_time(now / 1000);
                if (dapp_->seal()) ++blocks_sealed_;
                release(validator_, [&](std::uint64_t next) { start_validation(now, next); });
                schedule(now + to_us(config_.latency.network_hop.sample(rng_)), Stage::Reply, req);
                break;
            }
            case Stage::Reply: {
                latencies_.push_back(static_cast<double>(now - issue_time_[req]) / 1000.0);
                completions_.push_back(static_cast<double>(now) / 1000.0);
                if (issued_ < config_.request_count) issue(now);
                break;
            }
        }
    }

    const SimConfig& config_;
    SplitMix64 rng_;
    SplitMix64 route_rng_;
    std::priority_queue<Event, std::vector<Event>, std::greater<>> events_;
    std::uint64_t order_ = 0;
    std::uint64_t issued_ = 0;
    std::vector<Micros> issue_time_;
    std::vector<std::uint32_t> user_of_;
    std::vector<FifoServer> nodes_;
    FifoServer central_server_;
    FifoServer validator_;
    std::vector<double> latencies_;
    std::vector<double> completions_;
    std::unique_ptr<Dapp> dapp_;
    std::unique_ptr<perimeter::PerimeterAuthServer> central_;
    std::vector<AccountAddress> addresses_;
    std::uint64_t blocks_sealed_ = 0;
};

std::string fmt(double v, int decimals = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace

MetricsReport run_simulation(const SimConfig& config) {
    config.validate();
    return Simulation(config).run();
}

std::string metrics_to_json(const MetricsReport& r) {
    json j;
    j["mode"] = std::string(mode_name(r.mode));
    j["seed"] = r.seed;
    j["requests"] = r.per_request_latency_ms.size();
    j["served"] = r.served;
    j["dropped"] = r.dropped;
    j["blocks_sealed"] = r.blocks_sealed;
    j["average_latency_ms"] = r.average_latency_ms;
    j["avg_time_per_request_ms"] = r.avg_time_per_request_ms;
    j["throughput_rps"] = r.throughput_rps;
    return j.dump(2) + "\n";
}

std::string per_request_csv(const MetricsReport& r) {
    std::ostringstream out;
    out << "request,latency_ms,completion_ms\n";
    for (std::size_t i = 0; i < r.per_request_latency_ms.size(); ++i) {
        out << i + 1 << ',' << fmt(r.per_request_latency_ms[i]) << ',' << fmt(r.completion_times_ms[i]) << '\n';
    }
    return out.str();
}

std::string series_csv(const MetricsReport& r) {
    std::ostringstream out;
    out << "request,latency_ms,cumulative_ms,throughput_rps\n";
    for (std::size_t i = 0; i < r.per_request_latency_ms.size(); ++i) {
        const double cumulative = r.completion_times_ms[i];
        const double running = cumulative > 0 ? 1000.0 * static_cast<double>(i + 1) / cumulative : 0.0;
        out << i + 1 << ',' << fmt(r.per_request_latency_ms[i]) << ',' << fmt(cumulative) << ',' << fmt(running)
            << '\n';
    }
    return out.str();
}

std::filesystem::path default_reference_fixture() {
    return std::filesystem::path(ZTCHAIN_RESOURCE_DIR) / "reference_run.json";
}

ReferenceComparison replay_reference_table(const std::filesystem::path& fixture) {
    std::ifstream in(fixture);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + fixture.string());
    ReferenceComparison cmp;
    try {
        const json j = json::parse(in);
        for (const auto& row : j.at("rows")) {
            cmp.rows.push_back({row.at("request").get<int>(), row.at("dapp_latency_ms").get<double>(),
                                row.at("web_latency_ms").get<double>(), row.at("dapp_cumulative_ms").get<double>(),
                                row.at("web_cumulative_ms").get<double>()});
        }
        const auto& stated = j.at("stated");
        cmp.stated_dapp_latency_ms = stated.at("dapp_average_latency_ms").get<double>();
        cmp.stated_web_latency_ms = stated.at("web_average_latency_ms").get<double>();
        cmp.stated_dapp_throughput_rps = stated.at("dapp_throughput_rps").get<double>();
        cmp.stated_web_throughput_rps = stated.at("web_throughput_rps").get<double>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::FormatError, e.what());
    }

    std::vector<double> dl, wl, dc, wc;
    for (const auto& r : cmp.rows) {
        dl.push_back(r.dapp_latency_ms);
        wl.push_back(r.web_latency_ms);
        dc.push_back(r.dapp_cumulative_ms);
        wc.push_back(r.web_cumulative_ms);
    }
    cmp.dapp = compute_metrics(dl, dc);
    cmp.dapp.mode = Mode::ZeroTrust;
    cmp.web = compute_metrics(wl, wc);
    cmp.web.mode = Mode::Perimeter;

    // Stated values are given to two decimals.
    const auto check = [&](std::string quantity, double computed, double stated) {
        if (std::abs(computed - stated) > 0.005) cmp.discrepancies.push_back({std::move(quantity), computed, stated});
    };
    check("dapp_average_latency_ms", cmp.dapp.average_latency_ms, cmp.stated_dapp_latency_ms);
    check("web_average_latency_ms", cmp.web.average_latency_ms, cmp.stated_web_latency_ms);
    check("dapp_throughput_rps", cmp.dapp.throughput_rps, cmp.stated_dapp_throughput_rps);
    check("web_throughput_rps", cmp.web.throughput_rps, cmp.stated_web_throughput_rps);
    return cmp;
}

std::string comparison_to_json(const ReferenceComparison& cmp) {
    const auto side = [](const MetricsReport& m, double stated_latency, double stated_throughput) {
        return json{{"rows", m.per_request_latency_ms.size()},
                    {"average_latency_ms", m.average_latency_ms},
                    {"stated_average_latency_ms", stated_latency},
                    {"avg_time_per_request_ms", m.avg_time_per_request_ms},
                    {"throughput_rps", m.throughput_rps},
                    {"stated_throughput_rps", stated_throughput}};
    };
    json j;
    j["dapp"] = side(cmp.dapp, cmp.stated_dapp_latency_ms, cmp.stated_dapp_throughput_rps);
    j["web"] = side(cmp.web, cmp.stated_web_latency_ms, cmp.stated_web_throughput_rps);
    j["discrepancies"] = json::array();
    for (const auto& d : cmp.discrepancies) {
        j["discrepancies"].push_back({{"quantity", d.quantity}, {"computed", d.computed}, {"stated", d.stated}});
    }
    return j.dump(2) + "\n";
}

std::string comparison_to_text(const ReferenceComparison& cmp) {
    std::ostringstream out;
    out << "                     DApp (zero-trust)   Web app (perimeter)\n";
    out << "rows                 " << cmp.dapp.per_request_latency_ms.size() << "                   "
        << cmp.web.per_request_latency_ms.size() << "\n";
    out << "mean latency (ms)    " << fmt(cmp.dapp.average_latency_ms, 2) << "               "
        << fmt(cmp.web.average_latency_ms, 2) << "\n";
    out << "time/request (ms)    " << fmt(cmp.dapp.avg_time_per_request_ms, 2) << "               "
        << fmt(cmp.web.avg_time_per_request_ms, 2) << "\n";
    out << "throughput (req/s)   " << fmt(cmp.dapp.throughput_rps, 2) << "               "
        << fmt(cmp.web.throughput_rps, 2) << "\n";
    for (const auto& d : cmp.discrepancies) {
        out << "DISCREPANCY " << d.quantity << ": computed " << fmt(d.computed, 2) << " vs stated " << fmt(d.stated, 2)
            << "\n";
    }
    return out.str();
}

AvailabilityReport dos_flood(const SimConfig& config, double flood_multiplier, FloodModel model) {
    config.validate();
    if (!(flood_multiplier >= 1.0)) throw Error(ErrorCode::ConfigError, "flood multiplier must be >= 1");
    if (!(model.base_utilization > 0.0) || !(model.deadline_ms > 0.0)) {
        throw Error(ErrorCode::ConfigError, "flood model parameters must be positive");
    }

    const double service_ms = config.latency.central_lookup.mean();
    const double legit_rate = model.base_utilization / service_ms;  // per ms
    const double total_rate = legit_rate * flood_multiplier;
    const double flood_share = 1.0 - 1.0 / flood_multiplier;

    struct Queue {
        double free_at = 0.0;
        // Deterministic service with impatient customers: a request that
        // would wait longer than the deadline is dropped without service.
        bool offer(double t, double service, double deadline) {
            const double start = std::max(t, free_at);
            if (start - t > deadline) return false;
            free_at = start + service;
            return true;
        }
    };

    SplitMix64 arrivals(config.seed, /*stream=*/3);
    SplitMix64 routing(config.seed, /*stream=*/4);
    Queue central;
    std::vector<Queue> nodes(config.node_count);

    AvailabilityReport report;
    report.flood_multiplier = flood_multiplier;
    double t = 0.0;
    while (report.legitimate_requests < config.request_count) {
        t += -std::log1p(-arrivals.uniform()) / total_rate;
        const bool flood = arrivals.uniform() < flood_share;
        const auto node = routing.below(config.node_count);
        const bool central_ok = central.offer(t, service_ms, model.deadline_ms);
        const bool node_ok = nodes[node].offer(t, service_ms, model.deadline_ms);
        if (flood) {
            ++report.flood_requests;
            continue;
        }
        ++report.legitimate_requests;
        (central_ok ? report.perimeter.served : report.perimeter.dropped) += 1;
        (node_ok ? report.zero_trust.served : report.zero_trust.dropped) += 1;
    }
    const auto n = static_cast<double>(report.legitimate_requests);
    report.perimeter.success_rate = static_cast<double>(report.perimeter.served) / n;
    report.zero_trust.success_rate = static_cast<double>(report.zero_trust.served) / n;
    return report;
}

std::string availability_to_json(const AvailabilityReport& r) {
    const auto side = [](const Availability& a) {
        return json{{"served", a.served}, {"dropped", a.dropped}, {"success_rate", a.success_rate}};
    };
    json j;
    j["flood_multiplier"] = r.flood_multiplier;
    j["legitimate_requests"] = r.legitimate_requests;
    j["flood_requests"] = r.flood_requests;
    j["perimeter"] = side(r.perimeter);
    j["zero_trust"] = side(r.zero_trust);
    return j.dump(2) + "\n";
}

}  // namespace ztchain::sim
