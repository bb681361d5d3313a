// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/config.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ztchain/error.hpp"

namespace ztchain {

AppConfig app_config_from_json(std::string_view text, const std::filesystem::path& base_dir) {
    AppConfig c;
    c.simulation = sim::config_from_json(text);
    try {
        const auto j = nlohmann::json::parse(text);
        c.jit_threshold_ms = j.value("jit_threshold_ms", c.jit_threshold_ms);
        if (c.jit_threshold_ms <= 0) throw Error(ErrorCode::ConfigError, "jit_threshold_ms must be positive");
        if (j.contains("digest")) c.digest = digest_from_name(j.at("digest").get<std::string>());
        if (j.contains("gas_schedule")) {
            std::filesystem::path p = j.at("gas_schedule").get<std::string>();
            c.gas_schedule = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ConfigError, e.what());
    }
    return c;
}

AppConfig load_app_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return app_config_from_json(buf.str(), path.parent_path());
}

std::optional<std::filesystem::path> resolve_config_path(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return std::filesystem::path(*flag);
    if (const char* env = std::getenv(std::string(kConfigEnvVar).c_str()); env && *env) {
        return std::filesystem::path(env);
    }
    return std::nullopt;
}

}  // namespace ztchain
