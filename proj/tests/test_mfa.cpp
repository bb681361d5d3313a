// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>

#include "ztchain/digest.hpp"
#include "ztchain/error.hpp"
#include "ztchain/mfa_contract.hpp"

namespace ztchain::mfa {
namespace {

const AccountAddress kOwner = AccountAddress::from_label("admin");
const AccountAddress kAlice = AccountAddress::from_label("alice-workstation");
const AccountAddress kCharlie = AccountAddress::from_label("charlie-laptop");
constexpr std::string_view kEmail = "alice@securefinance.example";
constexpr std::string_view kPassword = "Alice#2024!vault";
constexpr std::string_view kMac = "3c:22:fb:7a:10:04";
const std::string kChecksum = digest_hex("alice device");

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

MultifactorAuthentication enrolled(MfaOptions options = {}) {
    MultifactorAuthentication c(kOwner, options);
    c.register_user(kAlice, kEmail, kPassword, kChecksum, kMac);
    c.assign_role(kOwner, kEmail, "Customer_Support", "Access to customer transaction histories");
    return c;
}

TEST(MfaTest, RegisterGuardsInOrder) {
    MultifactorAuthentication c(kOwner);
    EXPECT_EQ(code_of([&] { c.register_user(kAlice, "", "", "", ""); }), ErrorCode::EmptyEmail);
    EXPECT_EQ(code_of([&] { c.register_user(kAlice, kEmail, "", "", ""); }), ErrorCode::EmptyPassword);
    EXPECT_EQ(code_of([&] { c.register_user(kAlice, kEmail, kPassword, "", ""); }), ErrorCode::EmptyDeviceInfo);
    EXPECT_EQ(code_of([&] { c.register_user(kAlice, kEmail, kPassword, kChecksum, ""); }), ErrorCode::EmptyMac);
    EXPECT_EQ(code_of([&] { c.register_user(kNullAddress, kEmail, kPassword, kChecksum, kMac); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(c.state().user_count, 0u);
}

TEST(MfaTest, RegisterStoresDigestNotPassword) {
    MultifactorAuthentication c(kOwner);
    EXPECT_TRUE(c.register_user(kAlice, kEmail, kPassword, kChecksum, "3C-22-FB-7A-10-04"));
    const auto& u = c.state().users.at(std::string(kEmail));
    EXPECT_EQ(u.password_hash, digest(kPassword));
    EXPECT_EQ(u.mac_address, kMac);
    EXPECT_EQ(u.role, kNoRole);
    EXPECT_EQ(u.role_description, kNoDescription);
    EXPECT_EQ(u.user_address, kAlice);
}

TEST(MfaTest, ErrorMessagesAreContractStrings) {
    MultifactorAuthentication c(kOwner);
    c.register_user(kAlice, kEmail, kPassword, kChecksum, kMac);
    try {
        c.register_user(kAlice, kEmail, kPassword, kChecksum, kMac);
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "Username already exists");
    }
    try {
        c.assign_role(kAlice, kEmail, "r", "d");
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "Only the owner of the contract can perform this action.");
    }
}

TEST(MfaTest, AssignRoleGuardsInOrder) {
    MultifactorAuthentication c(kOwner);
    EXPECT_EQ(code_of([&] { c.assign_role(kAlice, "", "", ""); }), ErrorCode::NotOwner);
    EXPECT_EQ(code_of([&] { c.assign_role(kOwner, kEmail, "", ""); }), ErrorCode::EmptyRole);
    EXPECT_EQ(code_of([&] { c.assign_role(kOwner, kEmail, "r", ""); }), ErrorCode::EmptyRoleDescription);
    EXPECT_EQ(code_of([&] { c.assign_role(kOwner, "nobody@example.org", "r", "d"); }), ErrorCode::NoSuchUser);
}

TEST(MfaTest, LoginEmptyGuards) {
    const auto c = enrolled();
    EXPECT_EQ(code_of([&] { (void)c.login(kAlice, "", kPassword, kChecksum, kMac); }), ErrorCode::EmptyEmail);
    EXPECT_EQ(code_of([&] { (void)c.login(kAlice, kEmail, "", kChecksum, kMac); }), ErrorCode::EmptyPassword);
    EXPECT_EQ(code_of([&] { (void)c.login(kAlice, kEmail, kPassword, "", kMac); }), ErrorCode::EmptyDeviceInfo);
    EXPECT_EQ(code_of([&] { (void)c.login(kAlice, kEmail, kPassword, kChecksum, ""); }), ErrorCode::EmptyMac);
}

// Property: perturbing exactly one factor fires exactly that factor's code.
TEST(MfaTest, LoginFactorPerturbation) {
    const auto c = enrolled();
    EXPECT_TRUE(c.login(kAlice, kEmail, kPassword, kChecksum, kMac));
    EXPECT_TRUE(c.login(kAlice, kEmail, kPassword, kChecksum, "3C-22-FB-7A-10-04"));

    EXPECT_EQ(code_of([&] { (void)c.login(kAlice, "eve@example.org", kPassword, kChecksum, kMac); }),
              ErrorCode::NoSuchUser);
    EXPECT_EQ(code_of([&] { (void)c.login(kAlice, kEmail, "Alice#2024!vaulT", kChecksum, kMac); }),
              ErrorCode::InvalidPassword);
    EXPECT_EQ(code_of([&] { (void)c.login(kAlice, kEmail, kPassword, digest_hex("other"), kMac); }),
              ErrorCode::InvalidDevice);
    EXPECT_EQ(code_of([&] { (void)c.login(kAlice, kEmail, kPassword, kChecksum, "3c:22:fb:7a:10:05"); }),
              ErrorCode::InvalidMac);
    EXPECT_EQ(code_of([&] { (void)c.login(kCharlie, kEmail, kPassword, kChecksum, kMac); }),
              ErrorCode::WrongAccount);
}

TEST(MfaTest, StolenCredentialsFromAnotherDevice) {
    const auto c = enrolled();
    const auto charlie_device = digest_hex("charlie home machine");
    EXPECT_EQ(code_of([&] { (void)c.login(kCharlie, kEmail, kPassword, charlie_device, "a4:83:e7:51:09:c2"); }),
              ErrorCode::InvalidDevice);
}

TEST(MfaTest, NoRoleSentinelBlocksLogin) {
    MultifactorAuthentication c(kOwner);
    c.register_user(kAlice, kEmail, kPassword, kChecksum, kMac);
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(code_of([&] { (void)c.login(kAlice, kEmail, kPassword, kChecksum, kMac); }),
                  ErrorCode::NoRoleAssigned);
    }
    // The sentinel fires before the password check.
    EXPECT_EQ(code_of([&] { (void)c.login(kAlice, kEmail, "wrong", kChecksum, kMac); }), ErrorCode::NoRoleAssigned);
    c.assign_role(kOwner, kEmail, "Teller", "Views balances");
    EXPECT_TRUE(c.login(kAlice, kEmail, kPassword, kChecksum, kMac));
}

TEST(MfaTest, GetAllUsers) {
    MultifactorAuthentication c(kOwner);
    EXPECT_TRUE(c.get_all_users(kOwner).empty());
    for (const auto* e : {"c@x.org", "a@x.org", "b@x.org"}) c.register_user(kAlice, e, "pw", kChecksum, kMac);
    const auto users = c.get_all_users(kOwner);
    ASSERT_EQ(users.size(), 3u);
    EXPECT_EQ(users[0].email, "c@x.org");
    EXPECT_EQ(users[1].email, "a@x.org");
    EXPECT_EQ(users[2].email, "b@x.org");
    EXPECT_EQ(code_of([&] { (void)c.get_all_users(kAlice); }), ErrorCode::NotOwner);
}

TEST(MfaTest, RenderedUsersHideDigests) {
    const auto c = enrolled();
    const auto text = render_users_json(c.get_all_users(kOwner));
    EXPECT_EQ(text.find(digest_hex(kPassword)), std::string::npos);
    EXPECT_EQ(text.find(kPassword), std::string::npos);
    EXPECT_NE(text.find(kRedacted), std::string::npos);
}

TEST(MfaTest, UserCountNeverDecreases) {
    MultifactorAuthentication c(kOwner);
    std::uint64_t last = 0;
    for (int i = 0; i < 20; ++i) {
        const auto email = "u" + std::to_string(i % 7) + "@x.org";
        try {
            c.register_user(kAlice, email, "pw", kChecksum, kMac);
        } catch (const Error&) {
        }
        EXPECT_GE(c.state().user_count, last);
        last = c.state().user_count;
    }
    EXPECT_EQ(last, 7u);
}

TEST(MfaTest, FaultInjectionSwitches) {
    const auto no_device = enrolled({.device_check = false});
    EXPECT_TRUE(no_device.login(kCharlie, kEmail, kPassword, digest_hex("x"), "00:00:00:00:00:01"));
    EXPECT_EQ(code_of([&] { (void)no_device.login(kCharlie, kEmail, "bad", kChecksum, kMac); }),
              ErrorCode::InvalidPassword);

    auto no_guard = enrolled({.owner_guard = false});
    EXPECT_TRUE(no_guard.assign_role(kAlice, kEmail, "Administrator", "Everything"));
    EXPECT_EQ(no_guard.get_all_users(kAlice).size(), 1u);
}

TEST(MfaTest, Sha3Digest) {
    MultifactorAuthentication c(kOwner, {.digest = DigestAlgorithm::Sha3_256});
    c.register_user(kAlice, kEmail, kPassword, kChecksum, kMac);
    EXPECT_EQ(c.state().users.at(std::string(kEmail)).password_hash, digest(kPassword, DigestAlgorithm::Sha3_256));
}

}  // namespace
}  // namespace ztchain::mfa
