// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace ztchain {

/// Validator stakes, 1-based by position. Zero stakes are allowed and keep
/// their index, but such validators can never be selected.
class StakeTable {
public:
    /// Throws Error(EmptyTable) or Error(ZeroTotalStake).
    explicit StakeTable(std::vector<std::uint64_t> stakes);

    [[nodiscard]] std::span<const std::uint64_t> stakes() const noexcept { return stakes_; }
    [[nodiscard]] std::size_t size() const noexcept { return stakes_.size(); }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }

    /// Cumulative selection probabilities; the last entry is exactly 1.0.
    [[nodiscard]] const std::vector<double>& cumulative() const noexcept { return cumulative_; }

    bool operator==(const StakeTable& other) const { return stakes_ == other.stakes_; }

private:
    std::vector<std::uint64_t> stakes_;
    std::uint64_t total_ = 0;
    std::vector<double> cumulative_;
};

/// Reads {"stakes": [ints]}.
StakeTable load_stake_table(const std::filesystem::path& path);

/// Smallest 1-based i with r <= C[i]. r must lie in [0, 1].
std::size_t select_validator(const StakeTable& stakes, double r);

/// Empirical selection frequency per validator over `draws` seeded draws.
std::vector<double> selection_frequencies(const StakeTable& stakes, std::uint64_t draws, std::uint64_t seed);

/// The random draw used for a given sealing tick: one value from the
/// (seed, tick) stream.
double sealing_draw(std::uint64_t tick, std::uint64_t seed);

std::size_t pick_sealer(const StakeTable& stakes, std::uint64_t tick, std::uint64_t seed);

}  // namespace ztchain
