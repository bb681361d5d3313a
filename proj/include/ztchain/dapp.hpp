// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ztchain/consensus.hpp"
#include "ztchain/gasmeter.hpp"
#include "ztchain/jit_contract.hpp"
#include "ztchain/ledger.hpp"
#include "ztchain/mfa_contract.hpp"

namespace ztchain {

/// The four mitigations the threat harness can switch off one at a time.
struct Mitigations {
    bool device_check = true;
    bool owner_guard = true;
    bool jit_window = true;
    bool chain_verification = true;

    bool operator==(const Mitigations&) const = default;
};

struct DappConfig {
    AccountAddress owner = AccountAddress::from_label("admin");
    std::int64_t jit_threshold_ms = jit::kDefaultThresholdMs;
    std::uint64_t seed = 42;
    std::vector<std::uint64_t> stakes = {32, 32, 32, 32};
    gas::GasSchedule schedule = gas::default_schedule();
    DigestAlgorithm digest = DigestAlgorithm::Sha256;
    Mitigations mitigations;
};

/// Result of one contract call as seen by the caller. The call is on the
/// ledger either way; `seq` points at it.
struct CallOutcome {
    std::uint64_t seq = 0;
    std::optional<ErrorCode> error;
    bool value = false;  // login / isOvertime result
    std::optional<std::int64_t> deadline;
    std::optional<jit::TerminationOutcome> termination;

    [[nodiscard]] bool accepted() const noexcept { return !error.has_value(); }
};

struct ContractSnapshot {
    mfa::MfaContractState mfa;
    jit::JitState jit;

    bool operator==(const ContractSnapshot&) const = default;
};

struct ReplayResult {
    ContractSnapshot state;
    /// Accepted transactions that no longer re-execute cleanly.
    std::vector<std::uint64_t> divergent_seqs;
};

/// Rebuilds contract state from the ACCEPTED transactions alone.
ReplayResult replay_state(const std::vector<Transaction>& transactions, const DappConfig& config);

/// Both contracts deployed on one chain. Every call becomes a transaction
/// (rejected ones included), is charged gas, and is sealed into a block by
/// a stake-weighted validator on the next tick.
class Dapp {
public:
    /// Creates the chain and seals the two deployment transactions in block 1.
    explicit Dapp(DappConfig config = {}, std::int64_t genesis_time = 0);

    /// Continues an existing chain; contract state is replayed from it.
    /// Throws Error(FormatError) if the ledger does not replay cleanly.
    static Dapp resume(Chain chain, DappConfig config);

    CallOutcome register_user(const AccountAddress& caller, std::string_view email, std::string_view password,
                              std::string_view device_checksum, std::string_view mac_address);
    CallOutcome assign_role(const AccountAddress& caller, std::string_view email, std::string_view role,
                            std::string_view role_description);
    CallOutcome login(const AccountAddress& caller, std::string_view email, std::string_view password,
                      std::string_view device_checksum, std::string_view mac_address);
    std::pair<CallOutcome, std::vector<mfa::UserRecord>> get_all_users(const AccountAddress& caller);

    CallOutcome start_execution(const AccountAddress& caller, const AccountAddress& target);
    CallOutcome is_overtime(const AccountAddress& caller, const AccountAddress& target);
    CallOutcome terminate_execution(const AccountAddress& caller, const AccountAddress& target);
    void register_target(jit::TargetContract target);

    [[nodiscard]] std::int64_t now() const noexcept { return now_; }
    void advance(std::int64_t ms);
    void set_time(std::int64_t ms);

    /// One sealing tick: seals as many pending transactions as fit in the
    /// block gas limit. Returns nullopt when nothing is pending.
    std::optional<Block> seal();
    void seal_all();

    [[nodiscard]] const Chain& chain() const noexcept { return chain_; }
    [[nodiscard]] const DappConfig& config() const noexcept { return config_; }
    [[nodiscard]] const StakeTable& stakes() const noexcept { return stakes_; }
    [[nodiscard]] const mfa::MultifactorAuthentication& mfa() const noexcept { return mfa_; }
    [[nodiscard]] const jit::JustInTimeAccess& jit() const noexcept { return jit_; }
    [[nodiscard]] ContractSnapshot snapshot() const { return {mfa_.state(), jit_.state()}; }

    /// verify_chain, unless chain verification is switched off.
    [[nodiscard]] VerificationReport audit() const;

private:
    Dapp(DappConfig config, Chain chain);

    template <typename Fn>
    CallOutcome execute(const AccountAddress& caller, std::string_view contract, std::string_view operation,
                        std::map<std::string, std::string> payload, Fn&& body);

    DappConfig config_;
    Chain chain_;
    StakeTable stakes_;
    mfa::MultifactorAuthentication mfa_;
    jit::JustInTimeAccess jit_;
    std::int64_t now_ = 0;
};

/// Verifies a chain file, honouring the chain-verification switch.
FileAudit audit_chain_file(const std::filesystem::path& path, const Mitigations& mitigations,
                           DigestAlgorithm algo = DigestAlgorithm::Sha256);

/// Replays the call mix of the reference contract test run (9 registrations,
/// 3 role assignments, 3 JIT starts, 1 termination) and seals it.
void run_reference_workload(Dapp& dapp);

}  // namespace ztchain
