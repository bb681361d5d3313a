// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/error.hpp"

#include <json.hpp>

namespace ztchain {

const std::vector<ErrorInfo>& error_table() {
    static const std::vector<ErrorInfo> table = {
        {ErrorCode::EmptyEmail, "EMPTY_EMAIL", "name cannot be empty."},
        {ErrorCode::EmptyPassword, "EMPTY_PASSWORD", "Password cannot be empty."},
        {ErrorCode::EmptyDeviceInfo, "EMPTY_DEVICE_INFO", "deviceInfo cannot be empty."},
        {ErrorCode::EmptyMac, "EMPTY_MAC", "macAddress cannot be empty."},
        {ErrorCode::DuplicateUser, "DUPLICATE_USER", "Username already exists"},
        {ErrorCode::NotOwner, "NOT_OWNER", "Only the owner of the contract can perform this action."},
        {ErrorCode::EmptyRole, "EMPTY_ROLE", "role cannot be empty."},
        {ErrorCode::EmptyRoleDescription, "EMPTY_ROLE_DESCRIPTION", "roleDescription cannot be empty."},
        {ErrorCode::NoSuchUser, "NO_SUCH_USER", "User does not exist."},
        {ErrorCode::NoRoleAssigned, "NO_ROLE_ASSIGNED", "Role is not assigned."},
        {ErrorCode::InvalidPassword, "INVALID_PASSWORD", "Invalid password."},
        {ErrorCode::InvalidDevice, "INVALID_DEVICE", "Invalid device location."},
        {ErrorCode::InvalidMac, "INVALID_MAC", "Invalid MAC address."},
        {ErrorCode::WrongAccount, "WRONG_ACCOUNT", "This is not your account"},
        {ErrorCode::InvalidContractAddress, "INVALID_CONTRACT_ADDRESS", "Invalid contract address"},
        {ErrorCode::TerminateFailed, "TERMINATE_FAILED", "Failed to terminate contract execution"},
        {ErrorCode::EmptyPending, "EMPTY_PENDING", "No pending transactions to seal."},
        {ErrorCode::InvalidArgument, "INVALID_ARGUMENT", "Invalid argument."},
        {ErrorCode::ZeroTotalStake, "ZERO_TOTAL_STAKE", "Total stake is zero."},
        {ErrorCode::EmptyTable, "EMPTY_TABLE", "Stake table is empty."},
        {ErrorCode::UnknownOperation, "UNKNOWN_OPERATION", "Unknown contract operation."},
        {ErrorCode::IoError, "IO_ERROR", "I/O error."},
        {ErrorCode::FormatError, "FORMAT_ERROR", "Malformed input."},
        {ErrorCode::InvalidField, "INVALID_FIELD", "Invalid field value."},
        {ErrorCode::ConfigError, "CONFIG_ERROR", "Invalid configuration."},
        {ErrorCode::EmptyInput, "EMPTY_INPUT", "Input is empty."},
        {ErrorCode::UnknownScenario, "UNKNOWN_SCENARIO", "Unknown threat scenario."},
    };
    return table;
}

std::string_view error_name(ErrorCode code) {
    return error_table().at(static_cast<std::size_t>(code)).name;
}

std::string_view error_message(ErrorCode code) {
    return error_table().at(static_cast<std::size_t>(code)).message;
}

std::optional<ErrorCode> error_from_name(std::string_view name) {
    for (const auto& info : error_table()) {
        if (info.name == name) return info.code;
    }
    return std::nullopt;
}

std::string error_table_json() {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& info : error_table()) {
        j[std::string(info.name)] = std::string(info.message);
    }
    return j.dump(2) + "\n";
}

namespace {
std::string compose(ErrorCode code, const std::string& detail) {
    std::string out(error_message(code));
    if (!detail.empty()) out += " (" + detail + ")";
    return out;
}
}  // namespace

Error::Error(ErrorCode code) : std::runtime_error(std::string(error_message(code))), code_(code) {}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

}  // namespace ztchain
