// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/dapp.hpp"

#include <algorithm>

namespace ztchain {

namespace {

constexpr std::string_view kMfa = mfa::kContractName;
constexpr std::string_view kJit = jit::kContractName;

std::uint64_t payload_bytes(const std::map<std::string, std::string>& payload) {
    std::uint64_t n = 0;
    for (const auto& [k, v] : payload) n += v.size();
    return n;
}

mfa::MfaOptions mfa_options(const DappConfig& c) {
    return {c.mitigations.device_check, c.mitigations.owner_guard, c.digest};
}

jit::JitOptions jit_options(const DappConfig& c) { return {c.mitigations.jit_window}; }

Digest32 parse_digest(const std::string& hex) {
    const auto raw = from_hex(hex);
    if (raw.size() != 32) throw Error(ErrorCode::FormatError, "password_hash must be 32 bytes");
    Digest32 d{};
    std::copy(raw.begin(), raw.end(), d.begin());
    return d;
}

AccountAddress find_owner(const std::vector<Transaction>& txs, const AccountAddress& fallback) {
    for (const auto& tx : txs) {
        if (tx.contract == kMfa && tx.operation == gas::kDeployOperation && tx.status == TxStatus::Accepted) {
            return tx.caller;
        }
    }
    return fallback;
}

void replay_into(const std::vector<Transaction>& transactions, mfa::MultifactorAuthentication& mfa,
                 jit::JustInTimeAccess& jit, std::vector<std::uint64_t>& divergent) {
    const auto configured_threshold = jit.state().threshold_ms;
    for (const auto& tx : transactions) {
        if (tx.status != TxStatus::Accepted) continue;
        const auto& p = tx.payload;
        try {
            if (tx.contract == kMfa && tx.operation == "register") {
                mfa.register_hashed(tx.caller, p.at("email"), parse_digest(p.at("password_hash")),
                                    p.at("device_checksum"), p.at("mac_address"));
            } else if (tx.contract == kMfa && tx.operation == "assignRole") {
                mfa.assign_role(tx.caller, p.at("email"), p.at("role"), p.at("role_description"));
            } else if (tx.contract == kJit && tx.operation == "startExecution") {
                jit.set_threshold_ms(std::stoll(p.at("threshold_ms")));
                const auto deadline = jit.start_execution(AccountAddress::from_hex(p.at("target")), tx.logical_time);
                if (std::to_string(deadline) != p.at("deadline")) divergent.push_back(tx.seq);
            }
            // deploy, login, getAllUsers, isOvertime and terminateExecution
            // leave contract state untouched.
        } catch (const std::exception&) {
            divergent.push_back(tx.seq);
        }
    }
    jit.set_threshold_ms(configured_threshold);
}

}  // namespace

ReplayResult replay_state(const std::vector<Transaction>& transactions, const DappConfig& config) {
    mfa::MultifactorAuthentication mfa(find_owner(transactions, config.owner), mfa_options(config));
    jit::JustInTimeAccess jit(config.jit_threshold_ms, jit_options(config));
    ReplayResult result;
    replay_into(transactions, mfa, jit, result.divergent_seqs);
    result.state = {mfa.state(), jit.state()};
    return result;
}

Dapp::Dapp(DappConfig config, Chain chain)
    : config_(std::move(config)),
      chain_(std::move(chain)),
      stakes_(config_.stakes),
      mfa_(config_.owner, mfa_options(config_)),
      jit_(config_.jit_threshold_ms, jit_options(config_)) {
    config_.schedule.validate();
    now_ = chain_.head().timestamp;
}

Dapp::Dapp(DappConfig config, std::int64_t genesis_time)
    : Dapp(config, Chain(config.digest, genesis_time)) {
    const auto deploy = [](CallOutcome& out, auto&) { out.value = true; };
    execute(config_.owner, kMfa, gas::kDeployOperation, {}, deploy);
    execute(config_.owner, kJit, gas::kDeployOperation, {{"threshold_ms", std::to_string(config_.jit_threshold_ms)}},
            deploy);
    seal_all();
}

Dapp Dapp::resume(Chain chain, DappConfig config) {
    config.owner = find_owner(chain.all_transactions(), config.owner);
    Dapp dapp(std::move(config), std::move(chain));
    std::vector<std::uint64_t> divergent;
    replay_into(dapp.chain_.all_transactions(), dapp.mfa_, dapp.jit_, divergent);
    if (!divergent.empty()) {
        throw Error(ErrorCode::FormatError, "ledger replay diverged at seq " + std::to_string(divergent.front()));
    }
    return dapp;
}

template <typename Fn>
CallOutcome Dapp::execute(const AccountAddress& caller, std::string_view contract, std::string_view operation,
                          std::map<std::string, std::string> payload, Fn&& body) {
    Transaction tx;
    tx.caller = caller;
    tx.contract = std::string(contract);
    tx.operation = std::string(operation);
    tx.logical_time = now_;

    CallOutcome out;
    try {
        body(out, payload);
        tx.status = TxStatus::Accepted;
        tx.gas_used = gas::charge(config_.schedule, contract, operation, payload_bytes(payload));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::UnknownOperation || e.code() == ErrorCode::ConfigError) throw;
        tx.status = TxStatus::Rejected;
        tx.error_code = e.code();
        out.error = e.code();
    }
    tx.payload = std::move(payload);
    out.seq = chain_.record_transaction(std::move(tx));
    return out;
}

CallOutcome Dapp::register_user(const AccountAddress& caller, std::string_view email, std::string_view password,
                                std::string_view device_checksum, std::string_view mac_address) {
    std::map<std::string, std::string> payload{
        {"email", std::string(email)},
        {"password_hash", ""},
        {"device_checksum", std::string(device_checksum)},
        {"mac_address", mfa::stored_mac(mac_address)},
    };
    // Only an accepted registration carries the digest; replay needs it.
    return execute(caller, kMfa, "register", std::move(payload), [&](CallOutcome& out, auto& p) {
        out.value = mfa_.register_user(caller, email, password, device_checksum, mac_address);
        p["password_hash"] = to_prefixed_hex(mfa_.password_digest(password));
    });
}

CallOutcome Dapp::assign_role(const AccountAddress& caller, std::string_view email, std::string_view role,
                              std::string_view role_description) {
    std::map<std::string, std::string> payload{
        {"email", std::string(email)},
        {"role", std::string(role)},
        {"role_description", std::string(role_description)},
    };
    return execute(caller, kMfa, "assignRole", std::move(payload), [&](CallOutcome& out, auto&) {
        out.value = mfa_.assign_role(caller, email, role, role_description);
    });
}

CallOutcome Dapp::login(const AccountAddress& caller, std::string_view email, std::string_view password,
                        std::string_view device_checksum, std::string_view mac_address) {
    // The submitted password never reaches the ledger.
    std::map<std::string, std::string> payload{
        {"email", std::string(email)},
        {"device_checksum", std::string(device_checksum)},
        {"mac_address", std::string(mac_address)},
    };
    return execute(caller, kMfa, "login", std::move(payload), [&](CallOutcome& out, auto&) {
        out.value = mfa_.login(caller, email, password, device_checksum, mac_address);
    });
}

std::pair<CallOutcome, std::vector<mfa::UserRecord>> Dapp::get_all_users(const AccountAddress& caller) {
    std::vector<mfa::UserRecord> users;
    auto out = execute(caller, kMfa, "getAllUsers", {}, [&](CallOutcome& o, auto& payload) {
        users = mfa_.get_all_users(caller);
        payload["count"] = std::to_string(users.size());
        o.value = true;
    });
    return {out, std::move(users)};
}

CallOutcome Dapp::start_execution(const AccountAddress& caller, const AccountAddress& target) {
    std::map<std::string, std::string> payload{
        {"target", target.hex()},
        {"threshold_ms", std::to_string(jit_.state().threshold_ms)},
    };
    return execute(caller, kJit, "startExecution", std::move(payload), [&](CallOutcome& out, auto& p) {
        out.deadline = jit_.start_execution(target, now_);
        p["deadline"] = std::to_string(*out.deadline);
        out.value = true;
    });
}

CallOutcome Dapp::is_overtime(const AccountAddress& caller, const AccountAddress& target) {
    return execute(caller, kJit, "isOvertime", {{"target", target.hex()}}, [&](CallOutcome& out, auto& p) {
        out.value = jit_.is_overtime(target, now_);
        p["result"] = out.value ? "true" : "false";
    });
}

CallOutcome Dapp::terminate_execution(const AccountAddress& caller, const AccountAddress& target) {
    return execute(caller, kJit, "terminateExecution", {{"target", target.hex()}}, [&](CallOutcome& out, auto& p) {
        out.termination = jit_.terminate_execution(target, now_);
        out.value = *out.termination == jit::TerminationOutcome::Terminated;
        p["outcome"] = out.value ? "terminated" : "not_overtime";
    });
}

void Dapp::register_target(jit::TargetContract target) { jit_.register_target(std::move(target)); }

void Dapp::advance(std::int64_t ms) {
    if (ms < 0) throw Error(ErrorCode::InvalidArgument, "time cannot move backwards");
    now_ += ms;
}

void Dapp::set_time(std::int64_t ms) {
    if (ms < now_) throw Error(ErrorCode::InvalidArgument, "time cannot move backwards");
    now_ = ms;
}

std::optional<Block> Dapp::seal() {
    if (chain_.pending().empty()) return std::nullopt;
    const auto tick = chain_.blocks().size();
    const auto validator = static_cast<std::uint32_t>(pick_sealer(stakes_, tick, config_.seed));
    return chain_.seal_block(validator, now_, config_.schedule.block_gas_limit);
}

void Dapp::seal_all() {
    while (seal()) {
    }
}

VerificationReport Dapp::audit() const {
    if (!config_.mitigations.chain_verification) return {};
    return verify_chain(chain_);
}

FileAudit audit_chain_file(const std::filesystem::path& path, const Mitigations& mitigations, DigestAlgorithm algo) {
    if (mitigations.chain_verification) return audit_chain_file(path, algo);
    FileAudit audit;
    audit.loaded = true;  // trusted without looking
    return audit;
}

void run_reference_workload(Dapp& dapp) {
    const auto owner = dapp.config().owner;
    const auto target = AccountAddress::from_label("audit-report");
    jit::HaltableContract audit_report(target);
    dapp.register_target(audit_report.handle());

    // Email and device strings grow with i so register payload sizes vary.
    for (int i = 0; i < 9; ++i) {
        const auto label = "employee-" + std::to_string(i);
        const auto node = AccountAddress::from_label(label + "-node");
        const std::string email = label + std::string(static_cast<std::size_t>(i), 'x') + "@securefinance.example";
        const std::string checksum = digest_hex("device:" + label);
        dapp.register_user(node, email, "pw-" + label, checksum, "02:00:00:00:00:0" + std::to_string(i));
        if (i < 3) dapp.assign_role(owner, email, "Role_" + std::to_string(i), "Reference role " + std::to_string(i));
    }
    dapp.advance(1000);
    dapp.seal_all();
    for (int i = 0; i < 3; ++i) {
        dapp.start_execution(owner, target);
        dapp.advance(1);
    }
    dapp.advance(dapp.jit().state().threshold_ms + 1);
    dapp.terminate_execution(owner, target);
    dapp.seal_all();
}

}  // namespace ztchain
