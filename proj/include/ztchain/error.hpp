// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ztchain {

/// Every failure the library can report. Contract errors carry the exact
/// revert strings the on-chain contracts emit; the rest are artifact errors.
enum class ErrorCode {
    // MultifactorAuthentication
    EmptyEmail,
    EmptyPassword,
    EmptyDeviceInfo,
    EmptyMac,
    DuplicateUser,
    NotOwner,
    EmptyRole,
    EmptyRoleDescription,
    NoSuchUser,
    NoRoleAssigned,
    InvalidPassword,
    InvalidDevice,
    InvalidMac,
    WrongAccount,
    // JustInTimeAccess
    InvalidContractAddress,
    TerminateFailed,
    // ledger / consensus / gas / sim / harness
    EmptyPending,
    InvalidArgument,
    ZeroTotalStake,
    EmptyTable,
    UnknownOperation,
    IoError,
    FormatError,
    InvalidField,
    ConfigError,
    EmptyInput,
    UnknownScenario,
};

struct ErrorInfo {
    ErrorCode code;
    std::string_view name;     // e.g. "INVALID_PASSWORD"
    std::string_view message;  // e.g. "Invalid password."
};

/// The full code table in declaration order.
const std::vector<ErrorInfo>& error_table();

std::string_view error_name(ErrorCode code);
std::string_view error_message(ErrorCode code);
std::optional<ErrorCode> error_from_name(std::string_view name);

/// Renders the table as {"CODE": "message", ...}.
std::string error_table_json();

class Error : public std::runtime_error {
public:
    explicit Error(ErrorCode code);
    Error(ErrorCode code, const std::string& detail);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ztchain
