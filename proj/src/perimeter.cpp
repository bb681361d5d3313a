// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/perimeter.hpp"

#include <json.hpp>

#include "ztchain/digest.hpp"
#include "ztchain/error.hpp"

namespace ztchain::perimeter {

void PerimeterAuthServer::log(std::string_view actor, std::string_view action, std::string detail) {
    log_.push_back({log_.size(), now_, std::string(actor), std::string(action), std::move(detail)});
}

bool PerimeterAuthServer::register_user(std::string_view actor, std::string_view email, std::string_view password) {
    if (email.empty()) throw Error(ErrorCode::EmptyEmail);
    if (password.empty()) throw Error(ErrorCode::EmptyPassword);
    if (users_.contains(std::string(email))) throw Error(ErrorCode::DuplicateUser);
    users_[std::string(email)] = {std::string(email), digest_hex(password), "", ""};
    order_.emplace_back(email);
    log(actor, "register", std::string(email));
    return true;
}

bool PerimeterAuthServer::assign_role(std::string_view actor, std::string_view email, std::string_view role,
                                      std::string_view role_description) {
    auto it = users_.find(std::string(email));
    if (it == users_.end()) throw Error(ErrorCode::NoSuchUser);
    it->second.role = std::string(role);
    it->second.role_description = std::string(role_description);
    log(actor, "assignRole", std::string(email) + "=" + std::string(role));
    return true;
}

bool PerimeterAuthServer::login(std::string_view actor, std::string_view email, std::string_view password) {
    const auto it = users_.find(std::string(email));
    if (it == users_.end()) throw Error(ErrorCode::NoSuchUser);
    if (it->second.password_hash != digest_hex(password)) throw Error(ErrorCode::InvalidPassword);
    log(actor, "login", std::string(email));
    return true;
}

std::vector<Record> PerimeterAuthServer::get_all_users(std::string_view actor) {
    std::vector<Record> out;
    for (const auto& email : order_) out.push_back(users_.at(email));
    log(actor, "getAllUsers", std::to_string(out.size()));
    return out;
}

std::string render_users_json(const std::vector<Record>& users) {
    auto arr = nlohmann::json::array();
    for (const auto& u : users) {
        arr.push_back({{"email", u.email},
                       {"password_hash", u.password_hash},
                       {"role", u.role},
                       {"role_description", u.role_description}});
    }
    return arr.dump();
}

}  // namespace ztchain::perimeter
