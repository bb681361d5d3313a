// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ztchain::perimeter {

/// A conventional central login service: anyone inside the network boundary
/// is trusted, a password is the only factor, and the audit log is a plain
/// mutable table. It is the comparison baseline, not something to deploy.
struct Record {
    std::string email;
    std::string password_hash;  // hex
    std::string role;
    std::string role_description;
};

struct LogEntry {
    std::uint64_t index = 0;
    std::int64_t time = 0;
    std::string actor;
    std::string action;
    std::string detail;
};

class PerimeterAuthServer {
public:
    bool register_user(std::string_view actor, std::string_view email, std::string_view password);
    bool assign_role(std::string_view actor, std::string_view email, std::string_view role,
                     std::string_view role_description);
    bool login(std::string_view actor, std::string_view email, std::string_view password);
    [[nodiscard]] std::vector<Record> get_all_users(std::string_view actor);

    void set_time(std::int64_t ms) { now_ = ms; }

    /// Writable in place; nothing detects edits.
    [[nodiscard]] std::vector<LogEntry>& audit_log() noexcept { return log_; }
    [[nodiscard]] std::map<std::string, Record>& records() noexcept { return users_; }

private:
    void log(std::string_view actor, std::string_view action, std::string detail);

    std::map<std::string, Record> users_;
    std::vector<std::string> order_;
    std::vector<LogEntry> log_;
    std::int64_t now_ = 0;
};

/// Users rendered with every field, password hash included.
std::string render_users_json(const std::vector<Record>& users);

}  // namespace ztchain::perimeter
