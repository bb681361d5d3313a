// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ztchain/rng.hpp"

namespace ztchain::sim {

enum class Mode { ZeroTrust, Perimeter };

std::string_view mode_name(Mode mode);  // "zero-trust" / "perimeter"
Mode mode_from_name(std::string_view name);

/// Per-stage delay in milliseconds.
struct Distribution {
    enum class Kind { Constant, Uniform, Exponential };

    Kind kind = Kind::Constant;
    double a = 1.0;  // constant value, uniform lower bound, or exponential mean
    double b = 1.0;  // uniform upper bound

    static Distribution constant(double v) { return {Kind::Constant, v, v}; }
    static Distribution uniform(double lo, double hi) { return {Kind::Uniform, lo, hi}; }
    static Distribution exponential(double mean) { return {Kind::Exponential, mean, mean}; }

    [[nodiscard]] double sample(SplitMix64& rng) const;
    [[nodiscard]] double mean() const;
    void validate(std::string_view stage) const;

    bool operator==(const Distribution&) const = default;
};

/// Stage delays. The defaults are fitted, not measured: consensus validation
/// averages 32.5 ms and the central lookup 20 ms, which reproduces the
/// per-request times of the reference DApp / web-app comparison.
struct LatencyModel {
    Distribution network_hop = Distribution::uniform(1.0, 5.0);           // each direction
    Distribution contract_execution = Distribution::uniform(4.0, 12.0);   // at the intake node
    Distribution consensus_validation = Distribution::uniform(25.0, 40.0);  // one chain, serial
    Distribution central_lookup = Distribution::uniform(15.0, 25.0);      // perimeter server

    bool operator==(const LatencyModel&) const = default;
};

struct SimConfig {
    std::uint32_t node_count = 200;
    std::uint64_t request_count = 1000;
    std::uint64_t seed = 42;
    Mode mode = Mode::ZeroTrust;
    LatencyModel latency;
    /// Validator stakes; empty means one equal stake per node.
    std::vector<std::uint64_t> stakes;
    /// Requests in flight at once (closed-loop clients).
    std::uint32_t concurrency = 2;

    /// Throws Error(ConfigError).
    void validate() const;

    bool operator==(const SimConfig&) const = default;
};

SimConfig config_from_json(std::string_view text);
std::string config_to_json(const SimConfig& config);
SimConfig load_config(const std::filesystem::path& path);

struct MetricsReport {
    Mode mode = Mode::ZeroTrust;
    std::uint64_t seed = 0;
    std::vector<double> per_request_latency_ms;
    std::vector<double> completion_times_ms;  // cumulative, from simulation start
    double average_latency_ms = 0.0;
    double avg_time_per_request_ms = 0.0;
    double throughput_rps = 0.0;
    std::uint64_t served = 0;
    std::uint64_t dropped = 0;
    std::uint64_t blocks_sealed = 0;

    bool operator==(const MetricsReport&) const = default;
};

/// average = mean(latencies); time per request = max(completion) / count;
/// throughput = 1000 / time per request. Throws Error(EmptyInput).
MetricsReport compute_metrics(std::span<const double> latencies, std::span<const double> completion_times);

/// Deterministic discrete-event run. Zero-trust requests go intake hop ->
/// login on the intake node -> consensus validation and block seal ->
/// reply hop; perimeter requests go hop -> central lookup -> hop.
MetricsReport run_simulation(const SimConfig& config);

std::string metrics_to_json(const MetricsReport& report);
std::string per_request_csv(const MetricsReport& report);
/// request, latency_ms, cumulative_ms, throughput_rps (running) per row.
std::string series_csv(const MetricsReport& report);

struct ReferenceRow {
    int request = 0;
    double dapp_latency_ms = 0;
    double web_latency_ms = 0;
    double dapp_cumulative_ms = 0;
    double web_cumulative_ms = 0;
};

struct Discrepancy {
    std::string quantity;
    double computed = 0;
    double stated = 0;
};

struct ReferenceComparison {
    std::vector<ReferenceRow> rows;
    MetricsReport dapp;
    MetricsReport web;
    double stated_dapp_latency_ms = 0;
    double stated_web_latency_ms = 0;
    double stated_dapp_throughput_rps = 0;
    double stated_web_throughput_rps = 0;
    std::vector<Discrepancy> discrepancies;
};

std::filesystem::path default_reference_fixture();

/// Recomputes both columns of the bundled latency/throughput table and
/// flags every stated average its own rows do not reproduce.
ReferenceComparison replay_reference_table(const std::filesystem::path& fixture = default_reference_fixture());

std::string comparison_to_json(const ReferenceComparison& cmp);
std::string comparison_to_text(const ReferenceComparison& cmp);

struct Availability {
    std::uint64_t served = 0;   // legitimate requests answered within the deadline
    std::uint64_t dropped = 0;  // legitimate requests that timed out
    double success_rate = 0.0;

    bool operator==(const Availability&) const = default;
};

struct AvailabilityReport {
    double flood_multiplier = 1.0;
    std::uint64_t legitimate_requests = 0;
    std::uint64_t flood_requests = 0;
    Availability perimeter;
    Availability zero_trust;

    bool operator==(const AvailabilityReport&) const = default;
};

/// Login flood parameters: legitimate load as a fraction of one server's
/// capacity, the flood added on top as (multiplier - 1) times that load,
/// and how long a request may wait before it is dropped.
struct FloodModel {
    double base_utilization = 0.5;
    double deadline_ms = 500.0;
};

/// Same Poisson arrival stream against one central server and against
/// node_count intake nodes (random routing), each an M/D/1 queue with the
/// central lookup's mean service time.
AvailabilityReport dos_flood(const SimConfig& config, double flood_multiplier, FloodModel model = {});

std::string availability_to_json(const AvailabilityReport& report);

}  // namespace ztchain::sim
