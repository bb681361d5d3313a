// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/bytes.hpp"

#include <algorithm>

#include "ztchain/digest.hpp"
#include "ztchain/error.hpp"

namespace ztchain {

namespace {

constexpr char kDigits[] = "0123456789abcdef";

int nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string_view strip_prefix(std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    return hex;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

std::string to_prefixed_hex(std::span<const std::uint8_t> bytes) { return "0x" + to_hex(bytes); }

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    hex = strip_prefix(hex);
    if (hex.size() % 2 != 0) throw Error(ErrorCode::FormatError, "odd-length hex string");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = nibble(hex[2 * i]);
        const int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw Error(ErrorCode::FormatError, "non-hex character");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::vector<std::uint8_t> from_canonical_hex(std::string_view hex, std::size_t n) {
    if (hex.size() != 2 + 2 * n || hex.substr(0, 2) != "0x") {
        throw Error(ErrorCode::FormatError, "expected 0x-prefixed hex of " + std::to_string(n) + " bytes");
    }
    const bool lower = std::all_of(hex.begin() + 2, hex.end(), [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    });
    if (!lower) throw Error(ErrorCode::FormatError, "hex must be lowercase");
    return from_hex(hex);
}

AccountAddress AccountAddress::from_hex(std::string_view hex) {
    const auto raw = ztchain::from_hex(hex);
    if (raw.size() != kSize) throw Error(ErrorCode::FormatError, "address must be 20 bytes");
    std::array<std::uint8_t, kSize> bytes{};
    std::copy(raw.begin(), raw.end(), bytes.begin());
    return AccountAddress(bytes);
}

AccountAddress AccountAddress::from_label(std::string_view label) {
    const auto d = digest("ztchain-account:" + std::string(label));
    std::array<std::uint8_t, kSize> bytes{};
    std::copy_n(d.begin(), kSize, bytes.begin());
    return AccountAddress(bytes);
}

bool AccountAddress::is_null() const noexcept {
    return std::all_of(bytes_.begin(), bytes_.end(), [](auto b) { return b == 0; });
}

std::string AccountAddress::hex() const { return to_prefixed_hex(bytes_); }

}  // namespace ztchain
