// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ztchain/dapp.hpp"
#include "ztchain/digest.hpp"

namespace ztchain::testing {

/// The contract test run both contracts ship with, one entry per case.
/// Each check runs on a fresh Dapp and returns a failure message or nullopt.
struct ContractBehavior {
    std::string contract;
    std::string name;
    std::function<std::optional<std::string>()> check;
};

namespace detail {

inline const AccountAddress& alice() {
    static const auto a = AccountAddress::from_label("alice-workstation");
    return a;
}
inline const std::string kEmail = "alice@securefinance.example";
inline const std::string kPassword = "Alice#2024!vault";
inline const std::string kMac = "3c:22:fb:7a:10:04";
inline std::string checksum() { return digest_hex("alice device fingerprint"); }

inline std::optional<std::string> expect(bool ok, const std::string& what) {
    if (ok) return std::nullopt;
    return what;
}

inline CallOutcome enroll(Dapp& d) { return d.register_user(alice(), kEmail, kPassword, checksum(), kMac); }

inline CallOutcome grant(Dapp& d) {
    return d.assign_role(d.config().owner, kEmail, "Customer_Support", "Access to customer transaction histories");
}

}  // namespace detail

inline std::vector<ContractBehavior> contract_behaviors() {
    using namespace detail;
    const auto target = AccountAddress::from_label("audit-report");
    return {
        {"JustInTimeAccess", "StartsExecutionOfContract",
         [=]() -> std::optional<std::string> {
             Dapp d(DappConfig{}, 1000);
             const auto out = d.start_execution(d.config().owner, target);
             if (!out.accepted() || out.deadline != 301000) return "deadline is not now + threshold";
             return expect(d.jit().state().execution_deadline.at(target) == 301000, "deadline not stored");
         }},
        {"JustInTimeAccess", "ChecksWhetherContractExceededExecutionTime",
         [=]() -> std::optional<std::string> {
             Dapp d;
             d.start_execution(d.config().owner, target);
             d.advance(jit::kDefaultThresholdMs);
             if (d.is_overtime(d.config().owner, target).value) return "overtime at the deadline itself";
             d.advance(1);
             return expect(d.is_overtime(d.config().owner, target).value, "not overtime after the deadline");
         }},
        {"JustInTimeAccess", "TerminatesExecutionOfContract",
         [=]() -> std::optional<std::string> {
             Dapp d;
             jit::HaltableContract contract(target);
             d.register_target(contract.handle());
             d.start_execution(d.config().owner, target);
             d.advance(jit::kDefaultThresholdMs + 1);
             const auto out = d.terminate_execution(d.config().owner, target);
             return expect(out.accepted() && out.termination == jit::TerminationOutcome::Terminated &&
                               !contract.running(),
                           "target still running");
         }},
        {"MultifactorAuthentication", "RegistersNewUser",
         []() -> std::optional<std::string> {
             Dapp d;
             const auto out = enroll(d);
             return expect(out.accepted() && d.mfa().state().user_count == 1, "registration failed");
         }},
        {"MultifactorAuthentication", "AssignsRoleToUser",
         []() -> std::optional<std::string> {
             Dapp d;
             enroll(d);
             const auto out = grant(d);
             return expect(out.accepted() && d.mfa().state().users.at(kEmail).role == "Customer_Support",
                           "role not assigned");
         }},
        {"MultifactorAuthentication", "LogsInUser",
         []() -> std::optional<std::string> {
             Dapp d;
             enroll(d);
             grant(d);
             const auto out = d.login(alice(), kEmail, kPassword, checksum(), kMac);
             return expect(out.accepted() && out.value, "login refused");
         }},
        {"MultifactorAuthentication", "GetsAllUsers",
         []() -> std::optional<std::string> {
             Dapp d;
             enroll(d);
             d.register_user(AccountAddress::from_label("bob"), "bob@securefinance.example", "pw", checksum(),
                             "00:50:56:c0:00:08");
             const auto [out, users] = d.get_all_users(d.config().owner);
             return expect(out.accepted() && users.size() == 2 && users[0].email == kEmail, "wrong user list");
         }},
        {"MultifactorAuthentication", "RejectsDuplicateRegistration",
         []() -> std::optional<std::string> {
             Dapp d;
             enroll(d);
             const auto out = enroll(d);
             return expect(out.error == ErrorCode::DuplicateUser && d.mfa().state().user_count == 1,
                           "duplicate accepted");
         }},
        {"MultifactorAuthentication", "RejectsRoleAssignmentByNonOwner",
         []() -> std::optional<std::string> {
             Dapp d;
             enroll(d);
             const auto out = d.assign_role(alice(), kEmail, "Administrator", "Everything");
             return expect(out.error == ErrorCode::NotOwner, "non-owner assignment accepted");
         }},
        {"MultifactorAuthentication", "RejectsLoginWithIncorrectPassword",
         []() -> std::optional<std::string> {
             Dapp d;
             enroll(d);
             grant(d);
             const auto out = d.login(alice(), kEmail, "wrong password", checksum(), kMac);
             return expect(out.error == ErrorCode::InvalidPassword, "wrong password accepted");
         }},
        {"MultifactorAuthentication", "ReturnsEmptyListWhenNoUsers",
         []() -> std::optional<std::string> {
             Dapp d;
             const auto [out, users] = d.get_all_users(d.config().owner);
             return expect(out.accepted() && users.empty(), "list not empty");
         }},
    };
}

}  // namespace ztchain::testing
