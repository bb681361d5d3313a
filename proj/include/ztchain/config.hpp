// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ztchain/digest.hpp"
#include "ztchain/jit_contract.hpp"
#include "ztchain/simnet.hpp"

namespace ztchain {

inline constexpr std::string_view kConfigEnvVar = "ZTCHAIN_CONFIG";

/// One JSON file for every verb. Simulation keys sit at the top level
/// (see sim::config_from_json); the rest are optional.
struct AppConfig {
    sim::SimConfig simulation;
    std::int64_t jit_threshold_ms = jit::kDefaultThresholdMs;
    DigestAlgorithm digest = DigestAlgorithm::Sha256;
    std::optional<std::filesystem::path> gas_schedule;
};

/// Throws Error(ConfigError).
AppConfig app_config_from_json(std::string_view text, const std::filesystem::path& base_dir = {});
AppConfig load_app_config(const std::filesystem::path& path);

/// The --config flag if given, else $ZTCHAIN_CONFIG if set and non-empty.
std::optional<std::filesystem::path> resolve_config_path(const std::optional<std::string>& flag);

}  // namespace ztchain
