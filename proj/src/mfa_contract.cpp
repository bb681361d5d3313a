// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/mfa_contract.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

#include "ztchain/error.hpp"
#include "ztchain/fingerprint.hpp"

namespace ztchain::mfa {

std::string stored_mac(std::string_view mac) {
    try {
        return fingerprint::normalize_mac(mac);
    } catch (const Error&) {
        return std::string(mac);
    }
}

MultifactorAuthentication::MultifactorAuthentication(AccountAddress owner, MfaOptions options)
    : options_(options) {
    state_.contract_owner = owner;
}

Digest32 MultifactorAuthentication::password_digest(std::string_view password) const {
    return digest(password, options_.digest);
}

void MultifactorAuthentication::require_owner(const AccountAddress& caller) const {
    if (options_.owner_guard && caller != state_.contract_owner) throw Error(ErrorCode::NotOwner);
}

bool MultifactorAuthentication::register_user(const AccountAddress& caller, std::string_view email,
                                              std::string_view password, std::string_view device_checksum,
                                              std::string_view mac_address) {
    if (email.empty()) throw Error(ErrorCode::EmptyEmail);
    if (password.empty()) throw Error(ErrorCode::EmptyPassword);
    const Digest32 hash = password_digest(password);
    return register_impl(caller, email, &hash, device_checksum, mac_address);
}

bool MultifactorAuthentication::register_hashed(const AccountAddress& caller, std::string_view email,
                                                const Digest32& password_hash, std::string_view device_checksum,
                                                std::string_view mac_address) {
    return register_impl(caller, email, &password_hash, device_checksum, mac_address);
}

bool MultifactorAuthentication::register_impl(const AccountAddress& caller, std::string_view email,
                                              const Digest32* password_hash, std::string_view device_checksum,
                                              std::string_view mac_address) {
    if (email.empty()) throw Error(ErrorCode::EmptyEmail);
    if (password_hash == nullptr) throw Error(ErrorCode::EmptyPassword);
    if (device_checksum.empty()) throw Error(ErrorCode::EmptyDeviceInfo);
    if (mac_address.empty()) throw Error(ErrorCode::EmptyMac);
    if (caller.is_null()) throw Error(ErrorCode::InvalidArgument, "caller must not be the null address");
    const std::string key(email);
    if (state_.users.contains(key)) throw Error(ErrorCode::DuplicateUser);

    UserRecord rec;
    rec.user_address = caller;
    rec.email = key;
    rec.password_hash = *password_hash;
    rec.device_checksum = std::string(device_checksum);
    rec.mac_address = stored_mac(mac_address);
    state_.user_count += 1;
    state_.users.emplace(key, std::move(rec));
    state_.users_list.push_back(key);
    return true;
}

bool MultifactorAuthentication::assign_role(const AccountAddress& caller, std::string_view email,
                                            std::string_view role, std::string_view role_description) {
    require_owner(caller);
    if (role.empty()) throw Error(ErrorCode::EmptyRole);
    if (role_description.empty()) throw Error(ErrorCode::EmptyRoleDescription);
    auto it = state_.users.find(std::string(email));
    if (it == state_.users.end()) throw Error(ErrorCode::NoSuchUser);
    it->second.role = std::string(role);
    it->second.role_description = std::string(role_description);
    return true;
}

bool MultifactorAuthentication::login(const AccountAddress& caller, std::string_view email,
                                      std::string_view password, std::string_view device_checksum,
                                      std::string_view mac_address) const {
    if (email.empty()) throw Error(ErrorCode::EmptyEmail);
    if (password.empty()) throw Error(ErrorCode::EmptyPassword);
    if (device_checksum.empty()) throw Error(ErrorCode::EmptyDeviceInfo);
    if (mac_address.empty()) throw Error(ErrorCode::EmptyMac);

    const auto it = state_.users.find(std::string(email));
    if (it == state_.users.end()) throw Error(ErrorCode::NoSuchUser);
    const UserRecord& user = it->second;
    if (user.role == kNoRole) throw Error(ErrorCode::NoRoleAssigned);
    if (user.password_hash != password_digest(password)) throw Error(ErrorCode::InvalidPassword);
    if (options_.device_check) {
        if (user.device_checksum != device_checksum) throw Error(ErrorCode::InvalidDevice);
        if (user.mac_address != stored_mac(mac_address)) throw Error(ErrorCode::InvalidMac);
        if (user.user_address != caller) throw Error(ErrorCode::WrongAccount);
    }
    return true;
}

std::vector<UserRecord> MultifactorAuthentication::get_all_users(const AccountAddress& caller) const {
    require_owner(caller);
    std::vector<UserRecord> out;
    out.reserve(state_.users_list.size());
    for (const auto& email : state_.users_list) out.push_back(state_.users.at(email));
    return out;
}

std::string render_users_json(const std::vector<UserRecord>& users) {
    auto arr = nlohmann::json::array();
    for (const auto& u : users) {
        arr.push_back({{"user_address", u.user_address.hex()},
                       {"email", u.email},
                       {"password_hash", std::string(kRedacted)},
                       {"device_checksum", u.device_checksum},
                       {"mac_address", u.mac_address},
                       {"role", u.role},
                       {"role_description", u.role_description}});
    }
    return arr.dump();
}

}  // namespace ztchain::mfa
