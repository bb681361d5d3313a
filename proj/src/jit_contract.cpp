// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/jit_contract.hpp"

#include "ztchain/error.hpp"

namespace ztchain::jit {

JustInTimeAccess::JustInTimeAccess(std::int64_t threshold_ms, JitOptions options) : options_(options) {
    set_threshold_ms(threshold_ms);
}

void JustInTimeAccess::set_threshold_ms(std::int64_t threshold_ms) {
    if (threshold_ms <= 0) throw Error(ErrorCode::ConfigError, "jit threshold must be positive");
    state_.threshold_ms = threshold_ms;
}

void JustInTimeAccess::register_target(TargetContract target) {
    if (target.address.is_null()) throw Error(ErrorCode::InvalidContractAddress);
    hooks_[target.address] = std::move(target.terminate_hook);
}

std::int64_t JustInTimeAccess::start_execution(const AccountAddress& target, std::int64_t now) {
    if (target.is_null()) throw Error(ErrorCode::InvalidContractAddress);
    const std::int64_t deadline = now + state_.threshold_ms;
    state_.execution_deadline[target] = deadline;
    return deadline;
}

bool JustInTimeAccess::is_overtime(const AccountAddress& target, std::int64_t now) const {
    if (!options_.enforce_window || target.is_null()) return false;
    const auto it = state_.execution_deadline.find(target);
    if (it == state_.execution_deadline.end()) return false;
    return now > it->second;
}

TerminationOutcome JustInTimeAccess::terminate_execution(const AccountAddress& target, std::int64_t now) {
    if (target.is_null()) throw Error(ErrorCode::InvalidContractAddress);
    if (!is_overtime(target, now)) return TerminationOutcome::NotOvertime;
    const auto hook = hooks_.find(target);
    if (hook == hooks_.end() || !hook->second || !hook->second()) throw Error(ErrorCode::TerminateFailed);
    return TerminationOutcome::Terminated;
}

HaltableContract::HaltableContract(AccountAddress address)
    : address_(address), status_(std::make_shared<Status>()) {}

bool HaltableContract::terminate() {
    ++status_->terminate_calls;
    if (status_->fail_on_terminate) return false;
    status_->running = false;
    return true;
}

TargetContract HaltableContract::handle() const {
    return {address_, [self = *this]() mutable { return self.terminate(); }};
}

}  // namespace ztchain::jit
