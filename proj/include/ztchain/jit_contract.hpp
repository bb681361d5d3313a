// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string_view>

#include "ztchain/bytes.hpp"

namespace ztchain::jit {

inline constexpr std::string_view kContractName = "JustInTimeAccess";
inline constexpr std::int64_t kDefaultThresholdMs = 300'000;

/// A contract the JIT controller may halt. The hook returns false when the
/// halt did not go through.
struct TargetContract {
    AccountAddress address;
    std::function<bool()> terminate_hook;
};

struct JitState {
    std::map<AccountAddress, std::int64_t> execution_deadline;  // logical ms
    std::int64_t threshold_ms = kDefaultThresholdMs;

    bool operator==(const JitState&) const = default;
};

struct JitOptions {
    /// When false, is_overtime always answers false (fault injection).
    bool enforce_window = true;
};

enum class TerminationOutcome { NotOvertime, Terminated };

class JustInTimeAccess {
public:
    explicit JustInTimeAccess(std::int64_t threshold_ms = kDefaultThresholdMs, JitOptions options = {});

    void register_target(TargetContract target);

    /// deadline = now + threshold_ms; a restart overwrites the previous window.
    std::int64_t start_execution(const AccountAddress& target, std::int64_t now);

    /// False for the null address and for targets never started; otherwise
    /// now > deadline (strict).
    [[nodiscard]] bool is_overtime(const AccountAddress& target, std::int64_t now) const;

    /// No-op inside the window; past it, calls the target's terminate hook.
    TerminationOutcome terminate_execution(const AccountAddress& target, std::int64_t now);

    void set_threshold_ms(std::int64_t threshold_ms);

    [[nodiscard]] const JitState& state() const noexcept { return state_; }

private:
    JitState state_;
    JitOptions options_;
    std::map<AccountAddress, std::function<bool()>> hooks_;
};

/// A target contract with a running flag, e.g. the audit-report contract.
/// Copies share the same status.
class HaltableContract {
public:
    explicit HaltableContract(AccountAddress address);

    [[nodiscard]] const AccountAddress& address() const noexcept { return address_; }
    [[nodiscard]] bool running() const noexcept { return status_->running; }
    [[nodiscard]] int terminate_calls() const noexcept { return status_->terminate_calls; }

    /// Makes subsequent terminate calls report failure.
    void set_fail_on_terminate(bool fail) { status_->fail_on_terminate = fail; }

    bool terminate();
    [[nodiscard]] TargetContract handle() const;

private:
    struct Status {
        bool running = true;
        bool fail_on_terminate = false;
        int terminate_calls = 0;
    };

    AccountAddress address_;
    std::shared_ptr<Status> status_;
};

}  // namespace ztchain::jit
