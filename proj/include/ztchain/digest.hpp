// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "ztchain/bytes.hpp"

namespace ztchain {

/// Digest used for block hashes, password digests and device checksums.
/// Sha256 is the default everywhere; Sha3_256 exists for fidelity experiments.
enum class DigestAlgorithm { Sha256, Sha3_256 };

Digest32 digest(std::string_view data, DigestAlgorithm algo = DigestAlgorithm::Sha256);

inline std::string digest_hex(std::string_view data, DigestAlgorithm algo = DigestAlgorithm::Sha256) {
    const auto d = digest(data, algo);
    return to_hex(d);
}

std::string_view digest_name(DigestAlgorithm algo);

/// "sha256" or "sha3-256"; throws Error(ConfigError) otherwise.
DigestAlgorithm digest_from_name(std::string_view name);

}  // namespace ztchain
