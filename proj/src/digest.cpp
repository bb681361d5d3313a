// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ztchain/digest.hpp"

#include <openssl/evp.h>

#include <memory>

#include "ztchain/error.hpp"

namespace ztchain {

Digest32 digest(std::string_view data, DigestAlgorithm algo) {
    const EVP_MD* md = algo == DigestAlgorithm::Sha256 ? EVP_sha256() : EVP_sha3_256();
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    Digest32 out{};
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != out.size()) {
        throw std::runtime_error("digest computation failed");
    }
    return out;
}

std::string_view digest_name(DigestAlgorithm algo) {
    return algo == DigestAlgorithm::Sha256 ? "sha256" : "sha3-256";
}

DigestAlgorithm digest_from_name(std::string_view name) {
    if (name == "sha256") return DigestAlgorithm::Sha256;
    if (name == "sha3-256") return DigestAlgorithm::Sha3_256;
    throw Error(ErrorCode::ConfigError, "unknown digest '" + std::string(name) + "'");
}

}  // namespace ztchain
