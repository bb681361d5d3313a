// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ztchain {

using Digest32 = std::array<std::uint8_t, 32>;

/// Lowercase hex, no prefix.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Accepts an optional "0x" prefix and either case. Throws Error(FormatError).
std::vector<std::uint8_t> from_hex(std::string_view hex);

/// Like from_hex but only accepts the canonical rendering: "0x" followed by
/// exactly 2*n lowercase hex digits.
std::vector<std::uint8_t> from_canonical_hex(std::string_view hex, std::size_t n);

std::string to_prefixed_hex(std::span<const std::uint8_t> bytes);

/// 20-byte account identifier. The all-zero value is the null address.
class AccountAddress {
public:
    static constexpr std::size_t kSize = 20;

    constexpr AccountAddress() = default;
    explicit constexpr AccountAddress(const std::array<std::uint8_t, kSize>& bytes) : bytes_(bytes) {}

    /// Parses "0x" + 40 hex digits (either case).
    static AccountAddress from_hex(std::string_view hex);

    /// Deterministic simulated account for a human-readable label: the first
    /// 20 bytes of SHA-256("ztchain-account:" + label).
    static AccountAddress from_label(std::string_view label);

    [[nodiscard]] bool is_null() const noexcept;
    [[nodiscard]] std::string hex() const;
    [[nodiscard]] const std::array<std::uint8_t, kSize>& bytes() const noexcept { return bytes_; }

    auto operator<=>(const AccountAddress&) const = default;

private:
    std::array<std::uint8_t, kSize> bytes_{};
};

inline constexpr AccountAddress kNullAddress{};

}  // namespace ztchain
