// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "ztchain/dapp.hpp"
#include "ztchain/ledger.hpp"

namespace ztchain {
namespace {

using testing::TempDir;

Transaction make_tx(std::string op = "login") {
    Transaction tx;
    tx.caller = AccountAddress::from_label("alice");
    tx.contract = "MultifactorAuthentication";
    tx.operation = std::move(op);
    tx.payload = {{"email", "alice@example.org"}};
    tx.gas_used = 100;
    return tx;
}

TEST(LedgerTest, FirstTransactionGetsSeqOne) {
    Chain chain;
    EXPECT_EQ(chain.record_transaction(make_tx()), 1u);
    EXPECT_EQ(chain.record_transaction(make_tx()), 2u);
}

TEST(LedgerTest, RejectedLoginIsRecorded) {
    Dapp dapp;
    const auto alice = AccountAddress::from_label("alice");
    dapp.register_user(alice, "alice@example.org", "pw", "chk", "aa:bb:cc:dd:ee:ff");
    dapp.assign_role(dapp.config().owner, "alice@example.org", "Staff", "Staff member");
    const auto out = dapp.login(alice, "alice@example.org", "wrong", "chk", "aa:bb:cc:dd:ee:ff");
    dapp.seal_all();
    ASSERT_EQ(out.error, ErrorCode::InvalidPassword);
    const auto txs = dapp.chain().all_transactions();
    const auto it = std::find_if(txs.begin(), txs.end(), [&](const auto& t) { return t.seq == out.seq; });
    ASSERT_NE(it, txs.end());
    EXPECT_EQ(it->status, TxStatus::Rejected);
    EXPECT_EQ(it->error_code, ErrorCode::InvalidPassword);
    EXPECT_EQ(it->payload.count("password"), 0u);
}

TEST(LedgerTest, StatusErrorCodeInvariant) {
    Chain chain;
    auto tx = make_tx();
    tx.error_code = ErrorCode::NotOwner;
    EXPECT_THROW(chain.record_transaction(tx), Error);
    tx = make_tx();
    tx.status = TxStatus::Rejected;
    EXPECT_THROW(chain.record_transaction(tx), Error);
}

TEST(LedgerTest, Genesis) {
    Chain chain(DigestAlgorithm::Sha256, 0);
    ASSERT_EQ(chain.blocks().size(), 1u);
    const auto& g = chain.head();
    EXPECT_EQ(g.index, 0u);
    EXPECT_EQ(g.prev_hash, Digest32{});
    EXPECT_EQ(g.validator, 0u);
    EXPECT_EQ(g.block_hash, Chain(DigestAlgorithm::Sha256, 0).head().block_hash);
}

TEST(LedgerTest, SealKeepsCount) {
    Chain chain;
    for (int i = 0; i < 3; ++i) chain.record_transaction(make_tx());
    const auto& b = chain.seal_block(1, 10);
    EXPECT_EQ(b.index, 1u);
    EXPECT_EQ(b.transactions.size(), 3u);
    EXPECT_TRUE(chain.pending().empty());
}

TEST(LedgerTest, SealGuards) {
    Chain chain(DigestAlgorithm::Sha256, 100);
    try {
        chain.seal_block(1, 200);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyPending);
    }
    chain.record_transaction(make_tx());
    EXPECT_THROW(chain.seal_block(0, 200), Error);
    EXPECT_THROW(chain.seal_block(1, 99), Error);
}

TEST(LedgerTest, GasLimitDefersOverflow) {
    Chain chain;
    for (int i = 0; i < 5; ++i) chain.record_transaction(make_tx());  // 100 gas each
    EXPECT_EQ(chain.seal_block(1, 1, 250).transactions.size(), 2u);
    EXPECT_EQ(chain.pending().size(), 3u);
    EXPECT_EQ(chain.seal_block(1, 2, 250).transactions.size(), 2u);
    EXPECT_EQ(chain.seal_block(1, 3, 250).transactions.size(), 1u);
    auto big = make_tx();
    big.gas_used = 1000;
    chain.record_transaction(big);
    EXPECT_THROW(chain.seal_block(1, 4, 250), Error);
}

TEST(LedgerTest, HashIsDeterministicAndSensitive) {
    const auto chain = testing::random_chain(3, 4);
    const Block& b = chain.blocks()[2];
    EXPECT_EQ(compute_block_hash(b), compute_block_hash(Block(b)));
    for (const auto& [name, mutate] : testing::block_mutations(b)) {
        if (name == "block_hash") continue;  // not hashed
        Block copy = b;
        mutate(copy);
        EXPECT_NE(compute_block_hash(copy), compute_block_hash(b)) << name;
    }
}

TEST(LedgerTest, CanonicalSerializationShape) {
    Block b;
    b.index = 1;
    b.timestamp = 5;
    b.validator = 2;
    auto tx = make_tx();
    tx.seq = 1;
    b.transactions.push_back(tx);
    const auto s = canonical_serialization(b);
    EXPECT_EQ(s.find(' '), std::string::npos);
    EXPECT_EQ(s.rfind("{\"index\":1,\"prev_hash\":\"0x00", 0), 0u);
    EXPECT_NE(s.find("\"caller\":\"0x"), std::string::npos);
    EXPECT_EQ(s.find("block_hash"), std::string::npos);
}

TEST(LedgerTest, VerifyUntouchedChain) {
    EXPECT_TRUE(verify_chain(testing::random_chain(1, 10)).ok);
}

TEST(LedgerTest, VerifyReportsFirstBadBlock) {
    const auto chain = testing::random_chain(2, 12);
    for (std::size_t k = 1; k < chain.blocks().size(); ++k) {
        auto blocks = chain.blocks();
        blocks[k].transactions.front().payload["email"] = "mallory@example.org";
        const auto r = verify_chain(blocks);
        EXPECT_FALSE(r.ok);
        EXPECT_EQ(r.first_bad_index, k);
    }
}

TEST(LedgerTest, BrokenLinkDetected) {
    auto blocks = testing::random_chain(4, 5).blocks();
    blocks[3].prev_hash = blocks[1].block_hash;
    blocks[3].block_hash = compute_block_hash(blocks[3]);  // rehashed, link still wrong
    const auto r = verify_chain(blocks);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.first_bad_index, 3u);
}

// Property: every single-field mutation of every block is caught at that block.
TEST(LedgerTest, EveryFieldMutationDetected) {
    const auto chain = testing::random_chain(5, 20);
    std::size_t cases = 0;
    for (std::size_t k = 0; k < chain.blocks().size(); ++k) {
        for (const auto& [name, mutate] : testing::block_mutations(chain.blocks()[k])) {
            auto blocks = chain.blocks();
            mutate(blocks[k]);
            const auto r = verify_chain(blocks);
            EXPECT_FALSE(r.ok) << "block " << k << " " << name;
            EXPECT_EQ(r.first_bad_index, k) << "block " << k << " " << name;
            ++cases;
        }
    }
    EXPECT_GT(cases, 200u);
}

TEST(LedgerTest, SaveLoadRoundTrip) {
    TempDir dir;
    const auto chain = testing::random_chain(6, 8);
    save_chain(chain, dir / "c.chain.jsonl");
    const auto loaded = load_chain(dir / "c.chain.jsonl");
    EXPECT_TRUE(verify_chain(loaded).ok);
    EXPECT_EQ(loaded.blocks(), chain.blocks());
    EXPECT_EQ(loaded.next_seq(), chain.next_seq());
}

TEST(LedgerTest, TruncatedFileIsFormatError) {
    TempDir dir;
    save_chain(testing::random_chain(7, 3), dir / "c.chain.jsonl");
    auto text = testing::read_file(dir / "c.chain.jsonl");
    for (std::size_t cut : {text.size() - 1, text.size() / 2, std::size_t{0}}) {
        testing::write_file(dir / "t.chain.jsonl", text.substr(0, cut));
        try {
            load_chain(dir / "t.chain.jsonl");
            FAIL() << cut;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::FormatError);
        }
    }
}

TEST(LedgerTest, MissingFileIsIoError) {
    try {
        load_chain("/nonexistent/ztchain.chain.jsonl");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IoError);
    }
}

TEST(LedgerTest, EditedHashFieldLoadsButFailsVerify) {
    TempDir dir;
    save_chain(testing::random_chain(8, 4), dir / "c.chain.jsonl");
    auto text = testing::read_file(dir / "c.chain.jsonl");
    const auto pos = text.find("\"block_hash\":\"0x", text.find('\n') + 1) + 16;
    text[pos] = text[pos] == '0' ? '1' : '0';
    testing::write_file(dir / "c.chain.jsonl", text);
    const auto chain = load_chain(dir / "c.chain.jsonl");
    const auto r = verify_chain(chain);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.first_bad_index, 1u);
}

TEST(LedgerTest, PayloadByteEditInFileDetected) {
    TempDir dir;
    const auto chain = testing::random_chain(9, 5);
    save_chain(chain, dir / "c.chain.jsonl");
    auto text = testing::read_file(dir / "c.chain.jsonl");
    const auto pos = text.find("@example.org", text.find('\n') + 1);
    text[pos + 1] = 'E';
    testing::write_file(dir / "c.chain.jsonl", text);
    const auto audit = audit_chain_file(dir / "c.chain.jsonl");
    EXPECT_FALSE(audit.intact());
    EXPECT_EQ(audit.report.first_bad_index, 1u);
}

TEST(LedgerTest, NonCanonicalLineRejected) {
    const auto chain = testing::random_chain(10, 1);
    const auto line = chain_file_line(chain.blocks()[1]);
    EXPECT_EQ(parse_chain_line(line), chain.blocks()[1]);
    EXPECT_THROW(parse_chain_line(line + " "), Error);
    EXPECT_THROW(parse_chain_line("{\"index\":1}"), Error);
    auto upper = line;
    const auto p = upper.find("0x") + 2;
    upper.replace(p, 64, std::string(64, 'A'));
    EXPECT_THROW(parse_chain_line(upper), Error);
}

TEST(LedgerTest, Sha3Digest) {
    Chain a(DigestAlgorithm::Sha3_256, 0);
    Chain b(DigestAlgorithm::Sha256, 0);
    EXPECT_NE(a.head().block_hash, b.head().block_hash);
    a.record_transaction(make_tx());
    a.seal_block(1, 1);
    EXPECT_TRUE(verify_chain(a).ok);
    EXPECT_FALSE(verify_chain(a.blocks(), DigestAlgorithm::Sha256).ok);
}

TEST(LedgerTest, SeqIsBijectionWithCalls) {
    Dapp dapp;
    const auto owner = dapp.config().owner;
    const auto x = AccountAddress::from_label("x");
    std::vector<std::uint64_t> seqs;
    seqs.push_back(dapp.register_user(x, "x@example.org", "pw", "c", "aa:bb:cc:dd:ee:01").seq);
    seqs.push_back(dapp.register_user(x, "x@example.org", "pw", "c", "aa:bb:cc:dd:ee:01").seq);  // duplicate
    seqs.push_back(dapp.assign_role(x, "x@example.org", "r", "d").seq);                           // not owner
    seqs.push_back(dapp.assign_role(owner, "x@example.org", "r", "d").seq);
    seqs.push_back(dapp.login(x, "x@example.org", "pw", "c", "aa:bb:cc:dd:ee:01").seq);
    dapp.seal_all();
    std::vector<std::uint64_t> on_chain;
    for (const auto& tx : dapp.chain().all_transactions()) on_chain.push_back(tx.seq);
    // 1 and 2 are the two deployments.
    std::vector<std::uint64_t> expected{1, 2};
    expected.insert(expected.end(), seqs.begin(), seqs.end());
    EXPECT_EQ(on_chain, expected);
}

}  // namespace
}  // namespace ztchain
