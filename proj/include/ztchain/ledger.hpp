// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ztchain/bytes.hpp"
#include "ztchain/digest.hpp"
#include "ztchain/error.hpp"

namespace ztchain {

enum class TxStatus { Accepted, Rejected };

std::string_view status_name(TxStatus status);

/// One contract call, accepted or rejected. Rejected calls stay on the chain
/// as denial evidence but are skipped when contract state is replayed.
struct Transaction {
    std::uint64_t seq = 0;  // assigned by Chain::record_transaction
    AccountAddress caller;
    std::string contract;
    std::string operation;
    std::map<std::string, std::string> payload;
    std::int64_t logical_time = 0;  // ms
    TxStatus status = TxStatus::Accepted;
    std::optional<ErrorCode> error_code;  // present iff Rejected
    std::uint64_t gas_used = 0;

    bool operator==(const Transaction&) const = default;
};

struct Block {
    std::uint64_t index = 0;
    Digest32 prev_hash{};
    std::int64_t timestamp = 0;  // ms
    std::vector<Transaction> transactions;
    std::uint32_t validator = 0;  // 0 only for genesis
    Digest32 block_hash{};

    bool operator==(const Block&) const = default;
};

/// Canonical serialization of everything except block_hash: JSON, sorted
/// keys, no whitespace, decimal integers, bytes as 0x-prefixed lowercase hex.
std::string canonical_serialization(const Block& block);
std::string canonical_serialization(const Transaction& tx);

Digest32 compute_block_hash(const Block& block, DigestAlgorithm algo = DigestAlgorithm::Sha256);

/// The canonical serialization with "block_hash" added; one line of a
/// .chain.jsonl file (without the trailing newline).
std::string chain_file_line(const Block& block);

/// Strict inverse of chain_file_line: any input that does not re-serialize
/// byte-for-byte to itself is rejected with FormatError.
Block parse_chain_line(std::string_view line);

class Chain {
public:
    /// Creates the genesis block (index 0, zero prev_hash, validator 0).
    explicit Chain(DigestAlgorithm algo = DigestAlgorithm::Sha256, std::int64_t genesis_time = 0);

    /// Wraps already-committed blocks without checking them; use verify_chain.
    static Chain from_blocks(std::vector<Block> blocks, DigestAlgorithm algo = DigestAlgorithm::Sha256);

    /// Appends to pending and returns the assigned sequence number.
    std::uint64_t record_transaction(Transaction tx);

    /// Moves pending transactions into a new block. With a gas limit, only the
    /// longest prefix whose gas fits is sealed; the rest stays pending.
    const Block& seal_block(std::uint32_t validator, std::int64_t time,
                            std::optional<std::uint64_t> gas_limit = std::nullopt);

    [[nodiscard]] const std::vector<Block>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] const std::vector<Transaction>& pending() const noexcept { return pending_; }
    [[nodiscard]] const Block& head() const { return blocks_.back(); }
    [[nodiscard]] std::uint64_t next_seq() const noexcept { return next_seq_; }
    [[nodiscard]] DigestAlgorithm digest_algorithm() const noexcept { return algo_; }

    /// All transactions, committed first then pending, in seq order.
    [[nodiscard]] std::vector<Transaction> all_transactions() const;

private:
    struct Unbuilt {};
    explicit Chain(Unbuilt) {}

    std::vector<Block> blocks_;
    std::vector<Transaction> pending_;
    std::uint64_t next_seq_ = 1;
    DigestAlgorithm algo_ = DigestAlgorithm::Sha256;
};

struct VerificationReport {
    bool ok = true;
    std::optional<std::uint64_t> first_bad_index;
    std::string reason;
};

VerificationReport verify_chain(std::span<const Block> blocks, DigestAlgorithm algo = DigestAlgorithm::Sha256);
VerificationReport verify_chain(const Chain& chain);

/// Writes committed blocks only; pending transactions are not persisted.
void save_chain(const Chain& chain, const std::filesystem::path& path);
Chain load_chain(const std::filesystem::path& path, DigestAlgorithm algo = DigestAlgorithm::Sha256);

/// load_chain + verify_chain, folding a FormatError into the report.
struct FileAudit {
    bool loaded = false;
    std::string load_error;
    VerificationReport report;

    [[nodiscard]] bool intact() const { return loaded && report.ok; }
};

FileAudit audit_chain_file(const std::filesystem::path& path, DigestAlgorithm algo = DigestAlgorithm::Sha256);

}  // namespace ztchain
