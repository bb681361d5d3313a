// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/fingerprint.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "ztchain/digest.hpp"
#include "ztchain/error.hpp"

namespace ztchain::fingerprint {

namespace {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    // -0.000000 and 0.000000 are the same normalized coordinate.
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

void check_text(std::string_view field, std::string_view value) {
    if (value.find_first_of("\r\n") != std::string_view::npos) {
        throw Error(ErrorCode::InvalidField, std::string(field) + " must not contain line breaks");
    }
}

}  // namespace

std::string normalize_mac(std::string_view mac) {
    std::string digits;
    for (char c : mac) {
        if (c == ':' || c == '-' || c == '.') continue;
        if (!std::isxdigit(static_cast<unsigned char>(c))) {
            throw Error(ErrorCode::InvalidField, "mac '" + std::string(mac) + "' is not a MAC address");
        }
        digits.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (digits.size() != 12) throw Error(ErrorCode::InvalidField, "mac '" + std::string(mac) + "' must have 6 bytes");
    std::string out;
    for (std::size_t i = 0; i < 12; i += 2) {
        if (i) out.push_back(':');
        out.append(digits, i, 2);
    }
    return out;
}

std::string canonicalize(const DeviceInfo& info, int decimals) {
    if (decimals < 0 || decimals > 15) throw Error(ErrorCode::InvalidField, "coordinate precision out of range");
    if (!std::isfinite(info.latitude) || info.latitude < -90.0 || info.latitude > 90.0) {
        throw Error(ErrorCode::InvalidField, "latitude out of range");
    }
    if (!std::isfinite(info.longitude) || info.longitude < -180.0 || info.longitude > 180.0) {
        throw Error(ErrorCode::InvalidField, "longitude out of range");
    }
    check_text("browser", info.browser);
    check_text("ip", info.ip);
    check_text("os_name", info.os_name);
    check_text("os_version", info.os_version);

    std::string out;
    out += "lat=" + fixed(info.latitude, decimals) + '\n';
    out += "lon=" + fixed(info.longitude, decimals) + '\n';
    out += "browser=" + info.browser + '\n';
    out += "ip=" + info.ip + '\n';
    out += "os_name=" + info.os_name + '\n';
    out += "os_version=" + info.os_version + '\n';
    out += "mac=" + normalize_mac(info.mac);
    return out;
}

std::string checksum(const DeviceInfo& info, int decimals) {
    return digest_hex(canonicalize(info, decimals), DigestAlgorithm::Sha256);
}

}  // namespace ztchain::fingerprint
