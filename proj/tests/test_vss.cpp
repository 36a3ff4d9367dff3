// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "support/oracles.hpp"
#include "vspace/crypto/vss.hpp"

using namespace vspace;
using namespace vspace::crypto;

TEST_CASE("lagrange coefficients: hand-computed toy reconstruction") {
    // f(x) = 5 + 3x mod 11: shares (1,8), (2,0); lambda_1 = 2, lambda_2 = 10
    const Group& g = Group::by_label("toy");
    std::vector<uint32_t> idx = {1, 2};
    Scalar l1 = lagrange_at_zero(g, idx, 0);
    Scalar l2 = lagrange_at_zero(g, idx, 1);
    CHECK(l1.v == 2);
    CHECK(l2.v == 10);
    // 2*8 + 10*0 = 16 = 5 mod 11
    Scalar secret = g.s_add(g.s_mul(l1, g.s_from_u64(8)), g.s_mul(l2, g.s_from_u64(0)));
    CHECK(secret.v == 5);
}

TEST_CASE("single dealer degenerate ceremony") {
    const Group& g = Group::by_label("test256");
    Drbg rng = Drbg::from_u64(51);
    VssDealing d = dkg_deal(g, 1, 1, 1, rng);
    DkgOutput out = dkg_aggregate(g, std::vector{d}, 1, 1);
    CHECK(out.election_pk == d.commitments[0]);
    CHECK(out.verification_keys[0] == g.g_pow(out.secret_shares[0]));
}

TEST_CASE("two forced dealers in the toy group") {
    // a0 = 5 and a0 = 3: election pk = g^8 = 2^8 mod 23 = 3
    const Group& g = Group::by_label("toy");
    std::vector<Scalar> c1 = {g.s_from_u64(5), g.s_from_u64(7)};
    std::vector<Scalar> c2 = {g.s_from_u64(3), g.s_from_u64(2)};
    std::vector<VssDealing> ds = {dkg_deal_from_coeffs(g, c1, 2, 1), dkg_deal_from_coeffs(g, c2, 2, 2)};
    DkgOutput out = dkg_aggregate(g, ds, 2, 2);
    CHECK(out.election_pk.v == 3);
}

TEST_CASE("tampered share is named by dealer and trustee") {
    const Group& g = Group::by_label("test256");
    Drbg rng = Drbg::from_u64(52);
    std::vector<VssDealing> ds;
    for (uint32_t i = 1; i <= 3; i++) ds.push_back(dkg_deal(g, 2, 3, i, rng));
    ds[0].shares.at(2) = g.s_add(ds[0].shares.at(2), g.s_from_u64(1));
    CHECK(!dkg_verify_share(g, ds[0], 2, ds[0].shares.at(2)));
    try {
        dkg_aggregate(g, ds, 2, 3);
        FAIL("expected ShareVerificationFailed");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ShareVerificationFailed);
        CHECK(std::string(e.what()).find("dealer 1") != std::string::npos);
        CHECK(std::string(e.what()).find("trustee 2") != std::string::npos);
    }
    CHECK_THROWS_AS(dkg_aggregate(g, std::span(ds.data(), 2), 2, 3), Error);
}

namespace {

struct Ceremony {
    DkgOutput out;
};

Ceremony run_dkg(const Group& g, uint32_t t, uint32_t n, Drbg& rng) {
    std::vector<VssDealing> ds;
    for (uint32_t i = 1; i <= n; i++) ds.push_back(dkg_deal(g, t, n, i, rng));
    return Ceremony{dkg_aggregate(g, ds, t, n)};
}

} // namespace

TEST_CASE("partial decryption shares verify; corrupted or replayed ones do not") {
    const Group& g = Group::by_label("test256");
    Drbg rng = Drbg::from_u64(53);
    Ceremony c = run_dkg(g, 3, 5, rng);

    Transcript ctx("vspace/v1/test-tally");
    Ciphertext ct = encrypt(g, c.out.election_pk, 7, rng.uniform_scalar(g), 100);

    DecryptionShare ds = partial_decrypt(g, c.out.secret_shares[1], 2, ct, ctx, rng);
    CHECK(verify_share_proof(g, ct, ds, c.out.verification_keys[1], ctx));

    // share_value bumped to a^(share+1)
    DecryptionShare bad = ds;
    bad.share_value = g.mul(bad.share_value, ct.a);
    CHECK(!verify_share_proof(g, ct, bad, c.out.verification_keys[1], ctx));

    // replay the proof against a different ciphertext
    Ciphertext ct2 = encrypt(g, c.out.election_pk, 8, rng.uniform_scalar(g), 100);
    DecryptionShare replay = ds;
    replay.share_value = g.pow(ct2.a, c.out.secret_shares[1]);
    CHECK(!verify_share_proof(g, ct2, replay, c.out.verification_keys[1], ctx));
}

TEST_CASE("threshold combination: any t-subset agrees, t-1 fails") {
    const Group& g = Group::by_label("test256");
    Drbg rng = Drbg::from_u64(54);
    const uint32_t t = 3, n = 5;
    Ceremony c = run_dkg(g, t, n, rng);

    const uint64_t m = 42;
    Transcript ctx("vspace/v1/test-tally");
    Ciphertext ct = encrypt(g, c.out.election_pk, m, rng.uniform_scalar(g), 100);

    std::vector<DecryptionShare> all;
    for (uint32_t j = 1; j <= n; j++)
        all.push_back(partial_decrypt(g, c.out.secret_shares[j - 1], j, ct, ctx, rng));

    GroupElement expect = g.g_pow(g.s_from_u64(m));
    int subsets = 0;
    for (uint32_t a = 0; a < n; a++)
        for (uint32_t b = a + 1; b < n; b++)
            for (uint32_t d = b + 1; d < n; d++) {
                std::vector<DecryptionShare> subset = {all[a], all[b], all[d]};
                CHECK(combine_shares(g, ct, subset, t) == expect);
                subsets++;
                std::vector<DecryptionShare> pair = {all[a], all[b]};
                CHECK_THROWS_AS(combine_shares(g, ct, pair, t), Error);
            }
    CHECK(subsets == 10);

    // duplicate trustee index
    std::vector<DecryptionShare> dup = {all[0], all[0], all[1]};
    CHECK_THROWS_AS(combine_shares(g, ct, dup, t), Error);
}

TEST_CASE("decryption share serialization") {
    const Group& g = Group::by_label("test256");
    Drbg rng = Drbg::from_u64(55);
    Ceremony c = run_dkg(g, 2, 3, rng);
    Transcript ctx("vspace/v1/test-tally");
    Ciphertext ct = encrypt(g, c.out.election_pk, 1, rng.uniform_scalar(g), 10);
    DecryptionShare ds = partial_decrypt(g, c.out.secret_shares[0], 1, ct, ctx, rng);
    enc::Writer w;
    write_decryption_share(w, ds);
    enc::Reader r(w.out());
    CHECK(read_decryption_share(r, g) == ds);
}
