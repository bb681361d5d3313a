// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ztchain/dapp.hpp"

namespace ztchain::threats {

inline constexpr std::string_view kMitigated = "MITIGATED";
inline constexpr std::string_view kMitigatedByImmutability = "MITIGATED_BY_IMMUTABILITY";
inline constexpr std::string_view kNotApplicableDecentralized = "NOT_APPLICABLE_DECENTRALIZED";
inline constexpr std::string_view kFailed = "FAILED";
inline constexpr std::string_view kVulnerable = "VULNERABLE";
inline constexpr std::string_view kResisted = "RESISTED";

/// One scripted action. `op` selects the handler; the remaining keys of
/// `args` are op-specific (see docs/threat-scenarios.md).
struct Step {
    std::string op;
    nlohmann::json args;
};

struct ThreatScenario {
    std::string id;  // "T-1" .. "T-7"
    std::string title;
    std::string description;
    std::string expected_mitigation;
    std::string expected_verdict;
    nlohmann::json actors;  // name -> {node, device}
    std::vector<Step> steps;
};

struct Evidence {
    std::optional<std::uint64_t> seq;  // ledger sequence number, when the step produced a transaction
    std::string code;                  // error code, ACCEPTED, DETECTED, ...
    std::string note;

    bool operator==(const Evidence&) const = default;
};

struct ScenarioResult {
    std::string id;
    bool pass = false;
    std::string observed_verdict;
    std::string baseline_verdict;
    std::vector<Evidence> evidence;
    std::vector<std::string> failures;  // unmet expectations, zero-trust stack
    std::vector<Evidence> baseline_evidence;
};

struct ThreatReport {
    std::vector<ThreatScenario> scenarios;
    std::vector<ScenarioResult> results;

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] bool all_passed() const { return passed() == results.size(); }
};

std::filesystem::path default_scenario_file();

/// Parses and checks the scenario set: ids T-1..T-7 each exactly once.
/// Throws Error(FormatError).
std::vector<ThreatScenario> parse_scenarios(std::string_view text);
std::vector<ThreatScenario> load_scenarios(const std::filesystem::path& path = default_scenario_file());

/// Runs one scenario on fresh state against the zero-trust stack and the
/// perimeter baseline. Throws Error(UnknownScenario).
ScenarioResult run_scenario(const std::vector<ThreatScenario>& scenarios, std::string_view id,
                            const Mitigations& mitigations = {});
ScenarioResult run_scenario(std::string_view id, const Mitigations& mitigations = {});

ThreatReport run_all(const std::vector<ThreatScenario>& scenarios, const Mitigations& mitigations = {});
ThreatReport run_all(const Mitigations& mitigations = {});

/// Columns: Threat ID, Description, Expected mitigation, Observed verdict,
/// Perimeter baseline.
std::string render_markdown(const ThreatReport& report);
std::string render_json(const ThreatReport& report);

/// Mitigation names accepted by --disable: device-check, owner-guard,
/// jit-window, chain-verification. Throws Error(ConfigError).
void disable_mitigation(Mitigations& mitigations, std::string_view name);

}  // namespace ztchain::threats
