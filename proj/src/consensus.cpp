// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/consensus.hpp"

#include <fstream>
#include <json.hpp>

#include "ztchain/error.hpp"
#include "ztchain/rng.hpp"

namespace ztchain {

StakeTable::StakeTable(std::vector<std::uint64_t> stakes) : stakes_(std::move(stakes)) {
    if (stakes_.empty()) throw Error(ErrorCode::EmptyTable);
    for (auto s : stakes_) total_ += s;
    if (total_ == 0) throw Error(ErrorCode::ZeroTotalStake);

    const auto total = static_cast<double>(total_);
    cumulative_.reserve(stakes_.size());
    double running = 0.0;
    for (auto s : stakes_) {
        running += static_cast<double>(s) / total;
        cumulative_.push_back(running);
    }
    // Rounding can leave the sum a few ulps short of 1; r = 1.0 must still land
    // on the last validator with positive stake.
    std::size_t last_positive = stakes_.size() - 1;
    while (stakes_[last_positive] == 0) --last_positive;
    for (std::size_t i = last_positive; i < cumulative_.size(); ++i) cumulative_[i] = 1.0;
}

StakeTable load_stake_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    try {
        const auto j = nlohmann::json::parse(in);
        return StakeTable(j.at("stakes").get<std::vector<std::uint64_t>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::FormatError, e.what());
    }
}

std::size_t select_validator(const StakeTable& stakes, double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::InvalidArgument, "draw must lie in [0, 1]");
    const auto& c = stakes.cumulative();
    for (std::size_t i = 0; i < c.size(); ++i) {
        // A zero-stake validator shares its cumulative value with its
        // predecessor; skip it so that it is never chosen, even at r = 0.
        if (stakes.stakes()[i] == 0) continue;
        if (r <= c[i]) return i + 1;
    }
    return c.size();  // unreachable: c.back() == 1.0 and some stake is positive
}

std::vector<double> selection_frequencies(const StakeTable& stakes, std::uint64_t draws, std::uint64_t seed) {
    if (draws == 0) throw Error(ErrorCode::InvalidArgument, "draws must be >= 1");
    std::vector<std::uint64_t> counts(stakes.size(), 0);
    SplitMix64 rng(seed, /*stream=*/0x5e1ec7);
    for (std::uint64_t n = 0; n < draws; ++n) ++counts[select_validator(stakes, rng.uniform()) - 1];
    std::vector<double> freq(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(draws);
    }
    return freq;
}

double sealing_draw(std::uint64_t tick, std::uint64_t seed) {
    SplitMix64 rng(seed, tick);
    return rng.uniform();
}

std::size_t pick_sealer(const StakeTable& stakes, std::uint64_t tick, std::uint64_t seed) {
    return select_validator(stakes, sealing_draw(tick, seed));
}

}  // namespace ztchain
