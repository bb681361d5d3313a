// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/ledger.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ztchain {

using nlohmann::json;

std::string_view status_name(TxStatus status) {
    return status == TxStatus::Accepted ? "ACCEPTED" : "REJECTED";
}

namespace {

json tx_to_json(const Transaction& tx) {
    json j = json::object();
    j["seq"] = tx.seq;
    j["caller"] = tx.caller.hex();
    j["contract"] = tx.contract;
    j["operation"] = tx.operation;
    j["payload"] = json::object();
    for (const auto& [k, v] : tx.payload) j["payload"][k] = v;
    j["logical_time"] = tx.logical_time;
    j["status"] = std::string(status_name(tx.status));
    if (tx.error_code) j["error_code"] = std::string(error_name(*tx.error_code));
    j["gas_used"] = tx.gas_used;
    return j;
}

json block_to_json(const Block& b) {
    json j = json::object();
    j["index"] = b.index;
    j["prev_hash"] = to_prefixed_hex(b.prev_hash);
    j["timestamp"] = b.timestamp;
    j["transactions"] = json::array();
    for (const auto& tx : b.transactions) j["transactions"].push_back(tx_to_json(tx));
    j["validator"] = b.validator;
    return j;
}

Digest32 to_digest(std::string_view hex) {
    const auto raw = from_canonical_hex(hex, 32);
    Digest32 d{};
    std::copy(raw.begin(), raw.end(), d.begin());
    return d;
}

Transaction tx_from_json(const json& j) {
    Transaction tx;
    tx.seq = j.at("seq").get<std::uint64_t>();
    tx.caller = AccountAddress::from_hex(j.at("caller").get<std::string>());
    tx.contract = j.at("contract").get<std::string>();
    tx.operation = j.at("operation").get<std::string>();
    for (const auto& [k, v] : j.at("payload").items()) tx.payload[k] = v.get<std::string>();
    tx.logical_time = j.at("logical_time").get<std::int64_t>();
    const auto status = j.at("status").get<std::string>();
    if (status == "ACCEPTED") {
        tx.status = TxStatus::Accepted;
    } else if (status == "REJECTED") {
        tx.status = TxStatus::Rejected;
    } else {
        throw Error(ErrorCode::FormatError, "bad status '" + status + "'");
    }
    if (j.contains("error_code")) {
        const auto name = j.at("error_code").get<std::string>();
        tx.error_code = error_from_name(name);
        if (!tx.error_code) throw Error(ErrorCode::FormatError, "unknown error code '" + name + "'");
    }
    if ((tx.status == TxStatus::Rejected) != tx.error_code.has_value()) {
        throw Error(ErrorCode::FormatError, "error_code must be present iff status is REJECTED");
    }
    tx.gas_used = j.at("gas_used").get<std::uint64_t>();
    return tx;
}

}  // namespace

std::string canonical_serialization(const Block& block) { return block_to_json(block).dump(); }

std::string canonical_serialization(const Transaction& tx) { return tx_to_json(tx).dump(); }

Digest32 compute_block_hash(const Block& block, DigestAlgorithm algo) {
    return digest(canonical_serialization(block), algo);
}

std::string chain_file_line(const Block& block) {
    json j = block_to_json(block);
    j["block_hash"] = to_prefixed_hex(block.block_hash);
    return j.dump();
}

Block parse_chain_line(std::string_view line) {
    Block b;
    try {
        const json j = json::parse(line);
        if (!j.is_object()) throw Error(ErrorCode::FormatError, "block line is not an object");
        b.index = j.at("index").get<std::uint64_t>();
        b.prev_hash = to_digest(j.at("prev_hash").get<std::string>());
        b.timestamp = j.at("timestamp").get<std::int64_t>();
        for (const auto& tj : j.at("transactions")) b.transactions.push_back(tx_from_json(tj));
        b.validator = j.at("validator").get<std::uint32_t>();
        b.block_hash = to_digest(j.at("block_hash").get<std::string>());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::FormatError, e.what());
    }
    if (chain_file_line(b) != line) throw Error(ErrorCode::FormatError, "block line is not canonical");
    return b;
}

Chain::Chain(DigestAlgorithm algo, std::int64_t genesis_time) : algo_(algo) {
    Block genesis;
    genesis.timestamp = genesis_time;
    genesis.block_hash = compute_block_hash(genesis, algo_);
    blocks_.push_back(std::move(genesis));
}

Chain Chain::from_blocks(std::vector<Block> blocks, DigestAlgorithm algo) {
    if (blocks.empty()) throw Error(ErrorCode::FormatError, "chain has no genesis block");
    Chain c{Unbuilt{}};
    c.algo_ = algo;
    c.blocks_ = std::move(blocks);
    for (const auto& b : c.blocks_) {
        for (const auto& tx : b.transactions) c.next_seq_ = std::max(c.next_seq_, tx.seq + 1);
    }
    return c;
}

std::uint64_t Chain::record_transaction(Transaction tx) {
    if ((tx.status == TxStatus::Rejected) != tx.error_code.has_value()) {
        throw Error(ErrorCode::InvalidArgument, "error_code must be present iff status is REJECTED");
    }
    tx.seq = next_seq_++;
    pending_.push_back(std::move(tx));
    return pending_.back().seq;
}

const Block& Chain::seal_block(std::uint32_t validator, std::int64_t time, std::optional<std::uint64_t> gas_limit) {
    if (validator < 1) throw Error(ErrorCode::InvalidArgument, "validator index must be >= 1");
    if (time < head().timestamp) throw Error(ErrorCode::InvalidArgument, "block time precedes chain head");
    if (pending_.empty()) throw Error(ErrorCode::EmptyPending);

    std::size_t take = pending_.size();
    if (gas_limit) {
        std::uint64_t used = 0;
        take = 0;
        while (take < pending_.size() && used + pending_[take].gas_used <= *gas_limit) {
            used += pending_[take].gas_used;
            ++take;
        }
        if (take == 0) throw Error(ErrorCode::InvalidArgument, "transaction gas exceeds block gas limit");
    }

    Block b;
    b.index = blocks_.size();
    b.prev_hash = head().block_hash;
    b.timestamp = time;
    b.validator = validator;
    b.transactions.assign(std::make_move_iterator(pending_.begin()),
                          std::make_move_iterator(pending_.begin() + static_cast<std::ptrdiff_t>(take)));
    pending_.erase(pending_.begin(), pending_.begin() + static_cast<std::ptrdiff_t>(take));
    b.block_hash = compute_block_hash(b, algo_);
    blocks_.push_back(std::move(b));
    return blocks_.back();
}

std::vector<Transaction> Chain::all_transactions() const {
    std::vector<Transaction> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.transactions.begin(), b.transactions.end());
    out.insert(out.end(), pending_.begin(), pending_.end());
    return out;
}

VerificationReport verify_chain(std::span<const Block> blocks, DigestAlgorithm algo) {
    if (blocks.empty()) return {false, std::nullopt, "chain has no blocks"};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        if (compute_block_hash(b, algo) != b.block_hash) {
            return {false, i, "block hash mismatch"};
        }
        const Digest32 expected_prev = i == 0 ? Digest32{} : blocks[i - 1].block_hash;
        if (b.prev_hash != expected_prev) {
            return {false, i, "prev_hash does not link to previous block"};
        }
    }
    return {};
}

VerificationReport verify_chain(const Chain& chain) {
    return verify_chain(chain.blocks(), chain.digest_algorithm());
}

void save_chain(const Chain& chain, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    for (const auto& b : chain.blocks()) out << chain_file_line(b) << '\n';
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

Chain load_chain(const std::filesystem::path& path, DigestAlgorithm algo) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (text.empty()) throw Error(ErrorCode::FormatError, "empty chain file");
    if (text.back() != '\n') throw Error(ErrorCode::FormatError, "chain file is truncated");

    std::vector<Block> blocks;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto end = text.find('\n', start);
        const std::string_view line(text.data() + start, end - start);
        try {
            blocks.push_back(parse_chain_line(line));
        } catch (const Error& e) {
            throw Error(ErrorCode::FormatError, "line " + std::to_string(blocks.size() + 1) + ": " + e.what());
        }
        start = end + 1;
    }
    return Chain::from_blocks(std::move(blocks), algo);
}

FileAudit audit_chain_file(const std::filesystem::path& path, DigestAlgorithm algo) {
    FileAudit audit;
    try {
        const Chain chain = load_chain(path, algo);
        audit.loaded = true;
        audit.report = verify_chain(chain);
    } catch (const Error& e) {
        audit.load_error = e.what();
        audit.report = {false, std::nullopt, e.what()};
    }
    return audit;
}

}  // namespace ztchain
