// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "support/oracles.hpp"
#include "vspace/crypto/rng.hpp"

using namespace vspace;
using namespace vspace::crypto;

TEST_CASE("hand-verified toy encryptions") {
    const Group& g = Group::by_label("toy");
    GroupElement pk{8}; // sk = 3

    // m=0, r=0 -> (1, 1)
    Ciphertext zero = encrypt(g, pk, 0, g.s_from_u64(0), 10);
    CHECK(zero.a == g.identity());
    CHECK(zero.b == g.identity());

    // m=1, r=2 -> (2^2, 8^2 * 2) = (4, 13)
    Ciphertext one = encrypt(g, pk, 1, g.s_from_u64(2), 10);
    CHECK(one.a.v == 4);
    CHECK(one.b.v == 13);

    CHECK_THROWS_AS(encrypt(g, pk, 11, g.s_from_u64(2), 10), Error);
}

TEST_CASE("decrypt oracle round-trips random plaintexts") {
    const Group& g = Group::by_label("test256");
    Drbg rng = Drbg::from_u64(21);
    KeyPair kp = keygen(g, rng);
    for (int i = 0; i < 20; i++) {
        uint64_t m = rng.uniform_u64(1000);
        Ciphertext ct = encrypt(g, kp.pk, m, rng.uniform_scalar(g), 1000);
        CHECK(test::decrypt_with_sk(g, kp.sk, ct) == g.g_pow(g.s_from_u64(m)));
    }
}

TEST_CASE("homomorphic combination") {
    const Group& g = Group::by_label("test256");
    Drbg rng = Drbg::from_u64(22);
    KeyPair kp = keygen(g, rng);

    // identity element behaviour
    Ciphertext c = encrypt(g, kp.pk, 5, rng.uniform_scalar(g), 100);
    CHECK(ct_combine(g, encrypt(g, kp.pk, 0, g.s_from_u64(0), 100), c) == c);
    CHECK(ct_combine(g, ct_identity(g), c) == c);

    // Enc(1) * Enc(1) decrypts to g^2
    Ciphertext s = ct_combine(g, encrypt(g, kp.pk, 1, rng.uniform_scalar(g), 1),
                              encrypt(g, kp.pk, 1, rng.uniform_scalar(g), 1));
    CHECK(test::decrypt_with_sk(g, kp.sk, s) == g.g_pow(g.s_from_u64(2)));

    // fold over k random ballots equals Enc of the plaintext sum
    uint64_t sum = 0;
    Ciphertext acc = ct_identity(g);
    for (int i = 0; i < 12; i++) {
        uint64_t m = rng.uniform_u64(7);
        sum += m;
        acc = ct_combine(g, acc, encrypt(g, kp.pk, m, rng.uniform_scalar(g), 7));
    }
    CHECK(test::decrypt_with_sk(g, kp.sk, acc) == g.g_pow(g.s_from_u64(sum)));
}

TEST_CASE("discrete log decoding") {
    const Group& g = Group::by_label("toy");
    CHECK(decode_dlog(g, g.identity(), 5) == 0);
    CHECK(decode_dlog(g, GroupElement{4}, 3) == 2); // 2^2 = 4
    // 5 is not any power of 2 <= 3 (powers: 1, 2, 4, 8)
    CHECK_THROWS_AS(decode_dlog(g, GroupElement{5}, 3), Error);

    const Group& big = Group::by_label("test256");
    for (uint64_t m : {0ull, 1ull, 37ull, 999ull, 10000ull})
        CHECK(decode_dlog(big, big.g_pow(big.s_from_u64(m)), 10000) == m);
    CHECK_THROWS_AS(decode_dlog(big, big.g_pow(big.s_from_u64(10001)), 10000), Error);
}

TEST_CASE("ciphertext serialization") {
    const Group& g = Group::by_label("test256");
    Drbg rng = Drbg::from_u64(23);
    KeyPair kp = keygen(g, rng);
    Ciphertext ct = encrypt(g, kp.pk, 3, rng.uniform_scalar(g), 10);
    enc::Writer w;
    write_ciphertext(w, ct);
    enc::Reader r(w.out());
    CHECK(read_ciphertext(r, g) == ct);
}
