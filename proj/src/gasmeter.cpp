// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/gasmeter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "ztchain/error.hpp"

namespace ztchain::gas {

using nlohmann::json;

void GasSchedule::validate() const {
    if (block_gas_limit == 0) throw Error(ErrorCode::ConfigError, "block_gas_limit must be positive");
    for (const auto& [key, cost] : op_costs) {
        const auto name = key.first + "." + key.second;
        if (!(cost.min <= cost.avg && cost.avg <= cost.max)) {
            throw Error(ErrorCode::ConfigError, name + ": need min <= avg <= max");
        }
        if (cost.max > block_gas_limit) throw Error(ErrorCode::ConfigError, name + ": exceeds block gas limit");
    }
    for (const auto& [contract, cost] : deployment_costs) {
        if (cost > block_gas_limit) throw Error(ErrorCode::ConfigError, contract + " deployment exceeds block gas limit");
    }
    if (size_dependent && size_ref_min_bytes >= size_ref_max_bytes) {
        throw Error(ErrorCode::ConfigError, "size_reference_bytes must be an increasing pair");
    }
}

GasSchedule default_schedule() {
    GasSchedule s;
    s.op_costs[{"MultifactorAuthentication", "register"}] = {219332, 253556, 245956};
    s.op_costs[{"MultifactorAuthentication", "assignRole"}] = {42220, 42220, 42220};
    s.op_costs[{"MultifactorAuthentication", "login"}] = {0, 0, 0};
    s.op_costs[{"MultifactorAuthentication", "getAllUsers"}] = {0, 0, 0};
    s.op_costs[{"JustInTimeAccess", "startExecution"}] = {44313, 44313, 44313};
    s.op_costs[{"JustInTimeAccess", "isOvertime"}] = {0, 0, 0};
    s.op_costs[{"JustInTimeAccess", "terminateExecution"}] = {24194, 24194, 24194};
    s.deployment_costs["JustInTimeAccess"] = 419174;
    s.deployment_costs["MultifactorAuthentication"] = 2275063;
    s.block_gas_limit = 30'000'000;
    return s;
}

GasSchedule schedule_from_json(std::string_view text) {
    GasSchedule s;
    try {
        const json j = json::parse(text);
        s.block_gas_limit = j.value("block_gas_limit", std::uint64_t{30'000'000});
        s.per_byte_surcharge = j.value("per_byte_surcharge", std::uint64_t{0});
        s.size_dependent = j.value("size_dependent", false);
        if (j.contains("size_reference_bytes")) {
            const auto range = j.at("size_reference_bytes").get<std::vector<std::uint64_t>>();
            if (range.size() != 2) throw Error(ErrorCode::ConfigError, "size_reference_bytes needs two values");
            s.size_ref_min_bytes = range[0];
            s.size_ref_max_bytes = range[1];
        }
        for (const auto& m : j.at("methods")) {
            const auto avg = m.at("avg").get<std::uint64_t>();
            s.op_costs[{m.at("contract").get<std::string>(), m.at("method").get<std::string>()}] = {
                m.value("min", avg), m.value("max", avg), avg};
        }
        for (const auto& d : j.at("deployments")) {
            s.deployment_costs[d.at("contract").get<std::string>()] = d.at("gas").get<std::uint64_t>();
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ConfigError, e.what());
    }
    s.validate();
    return s;
}

std::string schedule_to_json(const GasSchedule& s) {
    json j;
    j["block_gas_limit"] = s.block_gas_limit;
    j["per_byte_surcharge"] = s.per_byte_surcharge;
    j["size_dependent"] = s.size_dependent;
    j["size_reference_bytes"] = {s.size_ref_min_bytes, s.size_ref_max_bytes};
    j["methods"] = json::array();
    for (const auto& [key, cost] : s.op_costs) {
        j["methods"].push_back(
            {{"contract", key.first}, {"method", key.second}, {"min", cost.min}, {"max", cost.max}, {"avg", cost.avg}});
    }
    j["deployments"] = json::array();
    for (const auto& [contract, gas] : s.deployment_costs) {
        j["deployments"].push_back({{"contract", contract}, {"gas", gas}});
    }
    return j.dump(2) + "\n";
}

GasSchedule load_schedule(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return schedule_from_json(buf.str());
}

std::uint64_t charge(const GasSchedule& schedule, std::string_view contract, std::string_view operation,
                     std::uint64_t payload_bytes) {
    if (operation == kDeployOperation) return deployment_charge(schedule, contract);
    const auto it = schedule.op_costs.find({std::string(contract), std::string(operation)});
    if (it == schedule.op_costs.end()) {
        throw Error(ErrorCode::UnknownOperation, std::string(contract) + "." + std::string(operation));
    }
    const GasCost& cost = it->second;
    std::uint64_t base = cost.avg;
    if (schedule.size_dependent && cost.min < cost.max) {
        const double lo = static_cast<double>(schedule.size_ref_min_bytes);
        const double hi = static_cast<double>(schedule.size_ref_max_bytes);
        const double t = std::clamp((static_cast<double>(payload_bytes) - lo) / (hi - lo), 0.0, 1.0);
        base = cost.min + static_cast<std::uint64_t>(std::llround(t * static_cast<double>(cost.max - cost.min)));
    }
    return base + schedule.per_byte_surcharge * payload_bytes;
}

std::uint64_t deployment_charge(const GasSchedule& schedule, std::string_view contract) {
    const auto it = schedule.deployment_costs.find(std::string(contract));
    if (it == schedule.deployment_costs.end()) {
        throw Error(ErrorCode::UnknownOperation, std::string(contract) + " deployment");
    }
    return it->second;
}

std::vector<GasReportRow> gas_report(const Chain& chain, const GasSchedule& schedule) {
    struct Acc {
        std::uint64_t sum = 0;
        std::uint64_t count = 0;
    };
    std::map<std::pair<std::string, std::string>, Acc> methods;
    std::map<std::string, Acc> deployments;
    for (const auto& block : chain.blocks()) {
        for (const auto& tx : block.transactions) {
            if (tx.status != TxStatus::Accepted) continue;
            Acc& acc = tx.operation == kDeployOperation ? deployments[tx.contract]
                                                        : methods[{tx.contract, tx.operation}];
            acc.sum += tx.gas_used;
            acc.count += 1;
        }
    }

    const auto mean = [](const Acc& a) {
        return static_cast<std::uint64_t>(std::llround(static_cast<double>(a.sum) / static_cast<double>(a.count)));
    };

    std::vector<GasReportRow> rows;
    for (const auto& [key, acc] : methods) {
        if (acc.sum == 0) continue;  // view calls
        GasReportRow row{key.first, key.second, std::nullopt, std::nullopt, mean(acc), acc.count, std::nullopt};
        const auto it = schedule.op_costs.find(key);
        if (it != schedule.op_costs.end() && it->second.min < it->second.max) {
            row.min = it->second.min;
            row.max = it->second.max;
        }
        rows.push_back(std::move(row));
    }
    for (const auto& [contract, acc] : deployments) {
        const auto avg = mean(acc);
        rows.push_back({contract, "", std::nullopt, std::nullopt, avg, acc.count,
                        100.0 * static_cast<double>(avg) / static_cast<double>(schedule.block_gas_limit)});
    }
    return rows;
}

std::string format_percent(double percent) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f %%", percent);
    return buf;
}

namespace {

std::string opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

std::string render_table(const std::vector<GasReportRow>& rows, const GasSchedule& schedule) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"Contract", "Method", "Min", "Max", "Avg", "# calls"});
    std::size_t first_deploy = std::string::npos;
    for (const auto& r : rows) {
        if (r.deployment()) {
            if (first_deploy == std::string::npos) first_deploy = cells.size();
            cells.push_back({r.contract, "", "-", "-", std::to_string(r.avg), format_percent(*r.percent_of_block_limit)});
        } else {
            cells.push_back({r.contract, r.method, opt(r.min), opt(r.max), std::to_string(r.avg),
                             std::to_string(r.call_count)});
        }
    }
    std::vector<std::size_t> width(6, 0);
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    width[5] = std::max(width[5], std::string("% of limit").size());

    std::ostringstream out;
    const auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? " | " : "| ");
            if (c >= 2) out << std::setw(static_cast<int>(width[c])) << std::right << row[c];
            else out << std::setw(static_cast<int>(width[c])) << std::left << row[c];
        }
        out << " |\n";
    };
    out << "Block limit: " << schedule.block_gas_limit << " gas\n";
    out << "Methods\n";
    line(cells[0]);
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (i == first_deploy) {
            out << "Deployments\n";
            line({"Contract", "", "", "", "Avg", "% of limit"});
        }
        line(cells[i]);
    }
    return out.str();
}

std::string render_csv(const std::vector<GasReportRow>& rows) {
    std::ostringstream out;
    out << "kind,contract,method,min,max,avg,calls,percent_of_block_limit\n";
    for (const auto& r : rows) {
        out << (r.deployment() ? "deployment" : "method") << ',' << r.contract << ',' << r.method << ','
            << (r.min ? std::to_string(*r.min) : "") << ',' << (r.max ? std::to_string(*r.max) : "") << ','
            << r.avg << ',' << r.call_count << ',';
        if (r.percent_of_block_limit) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", *r.percent_of_block_limit);
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_json(const std::vector<GasReportRow>& rows, const GasSchedule& schedule) {
    json j;
    j["block_gas_limit"] = schedule.block_gas_limit;
    j["methods"] = json::array();
    j["deployments"] = json::array();
    for (const auto& r : rows) {
        if (r.deployment()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", *r.percent_of_block_limit);
            j["deployments"].push_back({{"contract", r.contract},
                                        {"gas", r.avg},
                                        {"count", r.call_count},
                                        {"percent_of_block_limit", std::stod(buf)}});
        } else {
            json row{{"contract", r.contract}, {"method", r.method}, {"avg", r.avg}, {"calls", r.call_count}};
            row["min"] = r.min ? json(*r.min) : json(nullptr);
            row["max"] = r.max ? json(*r.max) : json(nullptr);
            j["methods"].push_back(row);
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace ztchain::gas
