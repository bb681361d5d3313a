// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ztchain/bytes.hpp"
#include "ztchain/digest.hpp"

namespace ztchain::mfa {

inline constexpr std::string_view kContractName = "MultifactorAuthentication";
inline constexpr std::string_view kNoRole = "NO_ROLE";
inline constexpr std::string_view kNoDescription = "NO_DESCRIPTION";
inline constexpr std::string_view kRedacted = "«redacted»";

struct UserRecord {
    AccountAddress user_address;
    std::string email;
    Digest32 password_hash{};
    std::string device_checksum;
    std::string mac_address;
    std::string role{kNoRole};
    std::string role_description{kNoDescription};

    bool operator==(const UserRecord&) const = default;
};

struct MfaContractState {
    AccountAddress contract_owner;
    std::uint64_t user_count = 0;
    std::map<std::string, UserRecord> users;  // keyed by email
    std::vector<std::string> users_list;      // registration order

    bool operator==(const MfaContractState&) const = default;
};

/// Switches for fault injection. Production code never turns these off; the
/// threat harness does, to prove each mitigation is load-bearing.
struct MfaOptions {
    /// Device binding: checksum, MAC and bound account address at login.
    bool device_check = true;
    /// onlyOwner on assign_role and get_all_users.
    bool owner_guard = true;
    DigestAlgorithm digest = DigestAlgorithm::Sha256;
};

/// State machine of the MultifactorAuthentication contract. Every failing
/// guard throws ztchain::Error with the contract's revert string, checked in
/// the contract's order so the first failure is deterministic.
class MultifactorAuthentication {
public:
    explicit MultifactorAuthentication(AccountAddress owner, MfaOptions options = {});

    /// Binds the record to `caller` (the enrolling session's account).
    bool register_user(const AccountAddress& caller, std::string_view email, std::string_view password,
                       std::string_view device_checksum, std::string_view mac_address);

    /// Same as register_user with the password already digested; used when
    /// replaying a ledger, which never holds plaintext.
    bool register_hashed(const AccountAddress& caller, std::string_view email, const Digest32& password_hash,
                         std::string_view device_checksum, std::string_view mac_address);

    bool assign_role(const AccountAddress& caller, std::string_view email, std::string_view role,
                     std::string_view role_description);

    [[nodiscard]] bool login(const AccountAddress& caller, std::string_view email, std::string_view password,
                             std::string_view device_checksum, std::string_view mac_address) const;

    [[nodiscard]] std::vector<UserRecord> get_all_users(const AccountAddress& caller) const;

    [[nodiscard]] const MfaContractState& state() const noexcept { return state_; }
    [[nodiscard]] const MfaOptions& options() const noexcept { return options_; }
    [[nodiscard]] Digest32 password_digest(std::string_view password) const;

private:
    bool register_impl(const AccountAddress& caller, std::string_view email, const Digest32* password_hash,
                       std::string_view device_checksum, std::string_view mac_address);
    void require_owner(const AccountAddress& caller) const;

    MfaContractState state_;
    MfaOptions options_;
};

/// MAC as stored by the contract: normalized when it parses, verbatim otherwise.
std::string stored_mac(std::string_view mac);

/// JSON array of user records with password_hash replaced by «redacted».
std::string render_users_json(const std::vector<UserRecord>& users);

}  // namespace ztchain::mfa
