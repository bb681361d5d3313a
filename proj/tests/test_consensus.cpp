// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "ztchain/consensus.hpp"

namespace ztchain {
namespace {

TEST(ConsensusTest, SingleValidator) {
    const StakeTable s({5});
    for (double r : {0.0, 0.3, 0.999, 1.0}) EXPECT_EQ(select_validator(s, r), 1u);
}

TEST(ConsensusTest, InclusiveBoundary) {
    const StakeTable s({1, 1});
    EXPECT_EQ(select_validator(s, 0.5), 1u);
    EXPECT_EQ(select_validator(s, std::nextafter(0.5, 1.0)), 2u);
}

TEST(ConsensusTest, HandComputedCumulative) {
    const StakeTable s({10, 30, 60});
    // C = [0.1, 0.4, 1.0]
    EXPECT_NEAR(s.cumulative()[0], 0.1, 1e-12);
    EXPECT_NEAR(s.cumulative()[1], 0.4, 1e-12);
    EXPECT_EQ(s.cumulative()[2], 1.0);
    EXPECT_EQ(select_validator(s, 0.35), 2u);
    EXPECT_EQ(select_validator(s, 0.05), 1u);
    EXPECT_EQ(select_validator(s, 0.41), 3u);
    EXPECT_EQ(select_validator(s, 1.0), 3u);
}

TEST(ConsensusTest, Guards) {
    EXPECT_THROW(StakeTable(std::vector<std::uint64_t>{}), Error);
    try {
        StakeTable bad({0, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroTotalStake);
    }
    const StakeTable s({1, 2});
    EXPECT_THROW(select_validator(s, -0.01), Error);
    EXPECT_THROW(select_validator(s, 1.01), Error);
    EXPECT_THROW(select_validator(s, std::nan("")), Error);
    EXPECT_THROW(selection_frequencies(s, 0, 1), Error);
}

TEST(ConsensusTest, SingleStakeFrequency) {
    const auto f = selection_frequencies(StakeTable({1}), 1000, 7);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0], 1.0);
}

TEST(ConsensusTest, EmpiricalFrequencies) {
    const auto f = selection_frequencies(StakeTable({10, 30, 60}), 100000, 42);
    EXPECT_NEAR(f[0], 0.1, 0.01);
    EXPECT_NEAR(f[1], 0.3, 0.01);
    EXPECT_NEAR(f[2], 0.6, 0.01);
}

TEST(ConsensusTest, ZeroStakeNeverSelected) {
    const StakeTable s({0, 5});
    EXPECT_EQ(select_validator(s, 0.0), 2u);
    EXPECT_EQ(selection_frequencies(s, 10000, 3)[0], 0.0);
    const StakeTable trailing({5, 0});
    EXPECT_EQ(select_validator(trailing, 1.0), 1u);
    const StakeTable middle({3, 0, 3});
    for (int i = 0; i <= 1000; ++i) EXPECT_NE(select_validator(middle, i / 1000.0), 2u);
}

TEST(ConsensusTest, ExactPartition) {
    const StakeTable s({7, 1, 13, 2, 9});
    EXPECT_EQ(s.cumulative().back(), 1.0);
    for (int i = 0; i <= 10000; ++i) {
        const auto v = select_validator(s, i / 10000.0);
        EXPECT_GE(v, 1u);
        EXPECT_LE(v, s.size());
    }
}

// Property: stakes x c pick the same validator for every r on the grid.
TEST(ConsensusTest, ScaleInvariance) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint64_t> base(1 + rng.below(8));
        for (auto& v : base) v = rng.below(100);
        base[rng.below(base.size())] += 1;
        for (std::uint64_t c : {2ull, 7ull, 1000ull}) {
            std::vector<std::uint64_t> scaled(base);
            for (auto& v : scaled) v *= c;
            const StakeTable a(base), b(scaled);
            for (int i = 0; i <= 1000; ++i) {
                EXPECT_EQ(select_validator(a, i / 1000.0), select_validator(b, i / 1000.0));
            }
        }
    }
}

// Property: raising S[j] never lowers j's share of the r grid.
TEST(ConsensusTest, Monotonicity) {
    SplitMix64 rng(12);
    const auto share = [](const StakeTable& s, std::size_t j) {
        int hits = 0;
        for (int i = 0; i <= 2000; ++i) hits += select_validator(s, i / 2000.0) == j + 1;
        return hits;
    };
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::uint64_t> stakes(2 + rng.below(5));
        for (auto& v : stakes) v = 1 + rng.below(50);
        const auto j = rng.below(stakes.size());
        const auto before = share(StakeTable(stakes), j);
        stakes[j] += 1 + rng.below(50);
        EXPECT_GE(share(StakeTable(stakes), j), before);
    }
}

TEST(ConsensusTest, SealerDeterminism) {
    const StakeTable s({50, 50});
    EXPECT_EQ(pick_sealer(s, 17, 99), pick_sealer(s, 17, 99));
    std::vector<std::size_t> a, b;
    for (std::uint64_t t = 0; t < 50; ++t) {
        a.push_back(pick_sealer(s, t, 5));
        b.push_back(pick_sealer(s, t, 5));
    }
    EXPECT_EQ(a, b);
}

TEST(ConsensusTest, SealerTickSweep) {
    const StakeTable s({50, 50});
    int first = 0;
    for (std::uint64_t t = 0; t < 10000; ++t) first += pick_sealer(s, t, 42) == 1;
    EXPECT_NEAR(first / 10000.0, 0.5, 0.03);
}

TEST(ConsensusTest, LoadStakeTable) {
    testing::TempDir dir;
    testing::write_file(dir / "s.json", R"({"stakes":[10,30,60]})");
    EXPECT_EQ(load_stake_table(dir / "s.json"), StakeTable({10, 30, 60}));
    testing::write_file(dir / "bad.json", R"({"stakes":"x"})");
    EXPECT_THROW(load_stake_table(dir / "bad.json"), Error);
}

}  // namespace
}  // namespace ztchain
