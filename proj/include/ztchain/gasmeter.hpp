// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ztchain/ledger.hpp"

namespace ztchain::gas {

inline constexpr std::string_view kDeployOperation = "deploy";

struct GasCost {
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    std::uint64_t avg = 0;

    bool operator==(const GasCost&) const = default;
};

struct GasSchedule {
    std::map<std::pair<std::string, std::string>, GasCost> op_costs;  // (contract, operation)
    std::map<std::string, std::uint64_t> deployment_costs;
    std::uint64_t block_gas_limit = 30'000'000;
    std::uint64_t per_byte_surcharge = 0;
    /// Charge min..max linearly by payload size over [size_ref_min, size_ref_max]
    /// bytes instead of the flat average.
    bool size_dependent = false;
    std::uint64_t size_ref_min_bytes = 0;
    std::uint64_t size_ref_max_bytes = 0;

    /// Throws Error(ConfigError) on any inconsistent entry.
    void validate() const;

    bool operator==(const GasSchedule&) const = default;
};

/// The measured costs of the reference Solidity contracts (solc 0.8.18,
/// optimizer off). View calls are free.
GasSchedule default_schedule();

GasSchedule schedule_from_json(std::string_view text);
std::string schedule_to_json(const GasSchedule& schedule);
GasSchedule load_schedule(const std::filesystem::path& path);

/// Gas for one call. Throws Error(UnknownOperation).
std::uint64_t charge(const GasSchedule& schedule, std::string_view contract, std::string_view operation,
                     std::uint64_t payload_bytes = 0);

std::uint64_t deployment_charge(const GasSchedule& schedule, std::string_view contract);

struct GasReportRow {
    std::string contract;
    std::string method;  // empty for deployment rows
    std::optional<std::uint64_t> min;  // schedule bounds, shown only for ranged entries
    std::optional<std::uint64_t> max;
    std::uint64_t avg = 0;            // mean of the charges actually recorded
    std::uint64_t call_count = 0;
    std::optional<double> percent_of_block_limit;  // deployments only

    [[nodiscard]] bool deployment() const { return percent_of_block_limit.has_value(); }
    bool operator==(const GasReportRow&) const = default;
};

/// Aggregates accepted, non-free calls in committed blocks: method rows
/// sorted by (contract, method), then deployment rows sorted by contract.
std::vector<GasReportRow> gas_report(const Chain& chain, const GasSchedule& schedule);

std::string format_percent(double percent);  // "7.6 %"

/// Aligned text table with the Methods / Deployments layout.
std::string render_table(const std::vector<GasReportRow>& rows, const GasSchedule& schedule);
std::string render_csv(const std::vector<GasReportRow>& rows);
std::string render_json(const std::vector<GasReportRow>& rows, const GasSchedule& schedule);

}  // namespace ztchain::gas
