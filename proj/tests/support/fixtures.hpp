// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ztchain/ledger.hpp"
#include "ztchain/rng.hpp"

namespace ztchain::testing {

/// Directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> n{0};
        path_ = std::filesystem::temp_directory_path() /
                ("ztchain-test-" + std::to_string(::getpid()) + "-" + std::to_string(n++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] const std::filesystem::path& path() const { return path_; }
    [[nodiscard]] std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

/// Chain of `blocks` sealed blocks (genesis excluded), one to three random
/// transactions each, some rejected.
inline Chain random_chain(std::uint64_t seed, std::size_t blocks) {
    static const char* kOps[] = {"register", "assignRole", "login", "startExecution", "terminateExecution"};
    static const ErrorCode kErrors[] = {ErrorCode::InvalidPassword, ErrorCode::NotOwner, ErrorCode::InvalidDevice};
    SplitMix64 rng(seed, 0x7e57);
    Chain chain(DigestAlgorithm::Sha256, 0);
    std::int64_t t = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto n = 1 + rng.below(3);
        for (std::uint64_t i = 0; i < n; ++i) {
            Transaction tx;
            tx.caller = AccountAddress::from_label("user-" + std::to_string(rng.below(8)));
            tx.operation = kOps[rng.below(5)];
            tx.contract = tx.operation.find("Execution") != std::string::npos ? "JustInTimeAccess"
                                                                               : "MultifactorAuthentication";
            tx.payload["email"] = "user" + std::to_string(rng.below(100)) + "@example.org";
            tx.payload["note"] = std::to_string(rng.next());
            tx.logical_time = t;
            if (rng.below(4) == 0) {
                tx.status = TxStatus::Rejected;
                tx.error_code = kErrors[rng.below(3)];
            } else {
                tx.gas_used = 20000 + rng.below(30000);
            }
            chain.record_transaction(std::move(tx));
        }
        t += 1 + static_cast<std::int64_t>(rng.below(1000));
        chain.seal_block(static_cast<std::uint32_t>(1 + rng.below(4)), t);
    }
    return chain;
}

/// Every single-field mutation of block `b`, each applied to a fresh copy.
static std::vector<std::pair<std::string, std::function<void(Block&)>>> block_mutations(const Block& b) {
    std::vector<std::pair<std::string, std::function<void(Block&)>>> m;
    m.emplace_back("index", [](Block& x) { x.index += 1; });
    m.emplace_back("prev_hash", [](Block& x) { x.prev_hash[31] ^= 0x01; });
    m.emplace_back("timestamp", [](Block& x) { x.timestamp += 1; });
    m.emplace_back("validator", [](Block& x) { x.validator += 1; });
    m.emplace_back("block_hash", [](Block& x) { x.block_hash[0] ^= 0x80; });
    m.emplace_back("drop_tx", [](Block& x) {
        if (x.transactions.empty()) x.transactions.emplace_back();
        else x.transactions.pop_back();
    });
    for (std::size_t i = 0; i < b.transactions.size(); ++i) {
        const auto tag = "tx" + std::to_string(i) + ".";
        m.emplace_back(tag + "seq", [i](Block& x) { x.transactions[i].seq += 1; });
        m.emplace_back(tag + "caller", [i](Block& x) {
            auto bytes = x.transactions[i].caller.bytes();
            bytes[19] ^= 0x01;
            x.transactions[i].caller = AccountAddress::from_hex(to_hex(bytes));
        });
        m.emplace_back(tag + "contract", [i](Block& x) { x.transactions[i].contract += "x"; });
        m.emplace_back(tag + "operation", [i](Block& x) { x.transactions[i].operation[0] ^= 0x20; });
        m.emplace_back(tag + "payload.value", [i](Block& x) { x.transactions[i].payload.begin()->second += "!"; });
        m.emplace_back(tag + "payload.key", [i](Block& x) { x.transactions[i].payload["extra"] = ""; });
        m.emplace_back(tag + "logical_time", [i](Block& x) { x.transactions[i].logical_time -= 1; });
        m.emplace_back(tag + "status", [i](Block& x) {
            auto& tx = x.transactions[i];
            if (tx.status == TxStatus::Accepted) {
                tx.status = TxStatus::Rejected;
                tx.error_code = ErrorCode::NotOwner;
            } else {
                tx.status = TxStatus::Accepted;
                tx.error_code.reset();
            }
        });
        m.emplace_back(tag + "error_code", [i](Block& x) {
            auto& tx = x.transactions[i];
            tx.error_code = tx.error_code == ErrorCode::WrongAccount ? ErrorCode::InvalidMac : ErrorCode::WrongAccount;
        });
        m.emplace_back(tag + "gas_used", [i](Block& x) { x.transactions[i].gas_used += 1; });
    }
    return m;
}

}  // namespace ztchain::testing
