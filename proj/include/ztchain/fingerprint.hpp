// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace ztchain::fingerprint {

/// Device attributes collected at enrollment and again at every login.
struct DeviceInfo {
    double latitude = 0.0;
    double longitude = 0.0;
    std::string browser;
    std::string ip;
    std::string os_name;
    std::string os_version;
    std::string mac;

    bool operator==(const DeviceInfo&) const = default;
};

inline constexpr std::string_view kFormatVersion = "fingerprint-v1";
inline constexpr int kDefaultCoordinateDecimals = 6;

/// Six lowercase hex pairs joined by ':'. Accepts ':', '-' or '.' separators
/// (or none) and either case. Throws Error(InvalidField).
std::string normalize_mac(std::string_view mac);

/// fingerprint-v1 layout: seven LF-joined `key=value` lines in the order
/// lat, lon, browser, ip, os_name, os_version, mac; coordinates fixed-point
/// with `decimals` places (6 by default); no trailing LF.
std::string canonicalize(const DeviceInfo& info, int decimals = kDefaultCoordinateDecimals);

/// Lowercase hex SHA-256 of canonicalize(info, decimals).
std::string checksum(const DeviceInfo& info, int decimals = kDefaultCoordinateDecimals);

}  // namespace ztchain::fingerprint
